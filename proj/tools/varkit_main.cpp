// varkit command line: every computation is a verb with stable TSV output.
// Exit codes: 0 success/true, 1 checked property false, 2 parse/validation
// error, 3 resource cap exceeded.

#include <CLI11.hpp>

#include <varkit/varkit.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

int exit_code_of(vk_status status) {
  if (status == VK_OK) return 0;
  if (status == VK_ERR_CAP) return kExitCap;
  return kExitParse;
}

[[noreturn]] void bail(vk_status status) {
  std::cerr << "error: " << vk_last_error() << "\n";
  std::exit(exit_code_of(status));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(kExitParse);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RepHandle {
  vk_rep* rep = nullptr;
  ~RepHandle() { vk_rep_free(rep); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { vk_string_free(s); }
};

void parse_rep_file(const std::string& path, RepHandle& out) {
  std::string text = read_file(path);
  if (vk_status rc = vk_rep_parse(text.c_str(), &out.rep)) bail(rc);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with group representations, polynomial identities and dimension subgroups"};
  app.require_subcommand(1);

  long long max_group = 0, max_degree = 0, max_assign = 0;
  app.add_option("--max-group", max_group, "lower the group-closure size cap");
  app.add_option("--max-degree", max_degree, "lower the multilinear degree cap");
  app.add_option("--max-assign", max_assign, "lower the exhaustive-check assignment cap");

  auto* magnus = app.add_subcommand("magnus", "expand a word into truncated power series");
  std::string magnus_word;
  int magnus_letters = 2, magnus_cutoff = 2, magnus_test_n = 0;
  magnus->add_option("word", magnus_word, "free-group word, e.g. \"comm(x1,x2)\"")->required();
  magnus->add_option("--letters", magnus_letters, "alphabet size")->required();
  magnus->add_option("--cutoff", magnus_cutoff, "truncation degree")->required();
  magnus->add_option("--test-n", magnus_test_n, "decide membership in the n-th dimension subgroup");

  auto* dimsub = app.add_subcommand("dimsub", "dimension subgroup series of a finite group");
  std::string dimsub_group, dimsub_coeff;
  int dimsub_nmax = 1;
  bool dimsub_gamma = false;
  dimsub->add_option("--group", dimsub_group, "group file (kind=perm or kind=matrix)")->required();
  dimsub->add_option("--coeff", dimsub_coeff, "coefficients: Z, Q or F<p>")->required();
  dimsub->add_option("--nmax", dimsub_nmax, "series length")->required();
  dimsub->add_flag("--gamma", dimsub_gamma, "compare against the lower central series");

  auto* identities = app.add_subcommand("identities", "multilinear identity space of an algebra");
  std::string identities_algebra, identities_rep;
  int identities_degree = 2;
  identities->add_option("--algebra", identities_algebra, "algebra file (kind=algebra)");
  identities->add_option("--rep", identities_rep, "representation file; its enveloping algebra is used");
  identities->add_option("--degree", identities_degree, "multilinear degree")->required();

  auto* trprod = app.add_subcommand("trprod", "triangular product of two representations");
  std::string trprod_left, trprod_right, trprod_hom = "full";
  trprod->add_option("--left", trprod_left, "left factor file")->required();
  trprod->add_option("--right", trprod_right, "right factor file")->required();
  trprod->add_option("--hom", trprod_hom, "corner basis (only \"full\" is supported)");

  auto* check = app.add_subcommand("check", "exhaustively check an identity on a finite group");
  std::string check_rep, check_identity;
  check->add_option("--rep", check_rep, "representation file")->required();
  check->add_option("--identity", check_identity, "\"action:<element>\" or \"poly:<polynomial>\"")->required();

  auto* verbal = app.add_subcommand("verbal", "verbal ideal of KG and the dimension subgroup D_sigma");
  std::string verbal_group, verbal_coeff, verbal_gens;
  verbal->add_option("--group", verbal_group, "group file")->required();
  verbal->add_option("--coeff", verbal_coeff, "coefficients: Q or F<p>")->required();
  verbal->add_option("--gens", verbal_gens, "';'-separated multilinear polynomials")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (max_group > 0 && vk_tighten_limit("group", max_group)) bail(VK_ERR_INVALID);
  if (max_degree > 0 && vk_tighten_limit("degree", max_degree)) bail(VK_ERR_INVALID);
  if (max_assign > 0 && vk_tighten_limit("assign", max_assign)) bail(VK_ERR_INVALID);

  if (magnus->parsed()) {
    StringOut report;
    if (magnus_test_n > 0) {
      int32_t in_dn = 0;
      if (vk_status rc = vk_magnus_test(magnus_word.c_str(), magnus_letters, magnus_cutoff, magnus_test_n,
                                        &in_dn, &report.s))
        bail(rc);
      std::cout << report.s;
      return in_dn ? 0 : kExitFalse;
    }
    if (vk_status rc = vk_magnus_expand(magnus_word.c_str(), magnus_letters, magnus_cutoff, &report.s)) bail(rc);
    std::cout << report.s;
    return 0;
  }

  if (dimsub->parsed()) {
    RepHandle group;
    parse_rep_file(dimsub_group, group);
    StringOut report;
    if (vk_status rc =
            vk_dimsub_report(group.rep, dimsub_coeff.c_str(), dimsub_nmax, dimsub_gamma ? 1 : 0, &report.s))
      bail(rc);
    std::cout << report.s;
    return 0;
  }

  if (identities->parsed()) {
    if (identities_algebra.empty() == identities_rep.empty()) {
      std::cerr << "error: exactly one of --algebra and --rep is required\n";
      return kExitParse;
    }
    StringOut report;
    if (!identities_algebra.empty()) {
      std::string text = read_file(identities_algebra);
      if (vk_status rc = vk_identities_of_algebra(text.c_str(), identities_degree, &report.s)) bail(rc);
    } else {
      RepHandle rep;
      parse_rep_file(identities_rep, rep);
      if (vk_status rc = vk_identities_of_rep(rep.rep, identities_degree, &report.s)) bail(rc);
    }
    std::cout << report.s;
    return 0;
  }

  if (trprod->parsed()) {
    if (trprod_hom != "full") {
      std::cerr << "error: unsupported --hom value \"" << trprod_hom << "\"\n";
      return kExitParse;
    }
    RepHandle left, right, product;
    parse_rep_file(trprod_left, left);
    parse_rep_file(trprod_right, right);
    if (vk_status rc = vk_rep_triangular_product(left.rep, right.rep, &product.rep)) bail(rc);
    StringOut text;
    if (vk_status rc = vk_rep_format(product.rep, &text.s)) bail(rc);
    std::cout << text.s;
    return 0;
  }

  if (check->parsed()) {
    RepHandle rep;
    parse_rep_file(check_rep, rep);
    StringOut report;
    int32_t holds = 0;
    if (vk_status rc = vk_check_identity(rep.rep, check_identity.c_str(), &holds, &report.s)) bail(rc);
    std::cout << report.s;
    return holds ? 0 : kExitFalse;
  }

  if (verbal->parsed()) {
    RepHandle group;
    parse_rep_file(verbal_group, group);
    StringOut report;
    if (vk_status rc = vk_verbal_report(group.rep, verbal_coeff.c_str(), verbal_gens.c_str(), &report.s))
      bail(rc);
    std::cout << report.s;
    return 0;
  }

  return kExitParse;
}
