#include "varkit/varkit.h"

#include "config.hpp"
#include "error.hpp"
#include "matrep.hpp"
#include "reports.hpp"
#include "textio.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

struct vk_rep {
  varkit::MatrixRepresentation rep;
};

namespace {

thread_local std::string g_last_error;

vk_status status_of(varkit::Errc code) {
  switch (code) {
    case varkit::Errc::parse: return VK_ERR_PARSE;
    case varkit::Errc::domain_mismatch: return VK_ERR_DOMAIN;
    case varkit::Errc::unsupported: return VK_ERR_UNSUPPORTED;
    case varkit::Errc::resource_cap: return VK_ERR_CAP;
    case varkit::Errc::invalid: return VK_ERR_INVALID;
  }
  return VK_ERR_INVALID;
}

template <typename Fn>
vk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return VK_OK;
  } catch (const varkit::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VK_ERR_INVALID;
  } catch (...) {
    g_last_error = "unknown error";
    return VK_ERR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vk_status require(bool ok, const char* what) {
  if (ok) return VK_OK;
  g_last_error = std::string("null argument: ") + what;
  return VK_ERR_NULL;
}

} // namespace

extern "C" {

const char* vk_version(void) { return "varkit 1.0.0"; }

const char* vk_last_error(void) { return g_last_error.c_str(); }

void vk_string_free(char* s) { std::free(s); }

vk_status vk_tighten_limit(const char* name, int64_t value) {
  if (auto rc = require(name, "vk_tighten_limit")) return rc;
  return guarded([&] {
    if (value < 1) varkit::fail(varkit::Errc::invalid, "limit must be positive");
    std::string key = name;
    auto& cfg = varkit::config();
    if (key == "group")
      cfg.max_group = std::min<long>(cfg.max_group, static_cast<long>(value));
    else if (key == "degree")
      cfg.max_degree = std::min<int>(cfg.max_degree, static_cast<int>(value));
    else if (key == "assign")
      cfg.max_assign = std::min<long long>(cfg.max_assign, value);
    else
      varkit::fail(varkit::Errc::invalid, "unknown limit \"" + key + "\"");
  });
}

vk_status vk_rep_parse(const char* text, vk_rep** out) {
  if (auto rc = require(text && out, "vk_rep_parse")) return rc;
  return guarded([&] { *out = new vk_rep{varkit::textio::parse_representation(text)}; });
}

void vk_rep_free(vk_rep* rep) { delete rep; }

vk_status vk_rep_format(const vk_rep* rep, char** out) {
  if (auto rc = require(rep && out, "vk_rep_format")) return rc;
  return guarded([&] { *out = dup_string(varkit::textio::format_representation(rep->rep)); });
}

vk_status vk_rep_dim(const vk_rep* rep, int32_t* out) {
  if (auto rc = require(rep && out, "vk_rep_dim")) return rc;
  *out = rep->rep.dim();
  return VK_OK;
}

vk_status vk_rep_generator_count(const vk_rep* rep, int32_t* out) {
  if (auto rc = require(rep && out, "vk_rep_generator_count")) return rc;
  *out = rep->rep.generator_count();
  return VK_OK;
}

vk_status vk_rep_group_order(const vk_rep* rep, int64_t* out) {
  if (auto rc = require(rep && out, "vk_rep_group_order")) return rc;
  return guarded([&] { *out = varkit::group_closure(rep->rep).order(); });
}

vk_status vk_rep_triangular_product(const vk_rep* left, const vk_rep* right, vk_rep** out) {
  if (auto rc = require(left && right && out, "vk_rep_triangular_product")) return rc;
  return guarded([&] { *out = new vk_rep{varkit::triangular_product(left->rep, right->rep)}; });
}

vk_status vk_magnus_expand(const char* word, int32_t letters, int32_t cutoff, char** report) {
  if (auto rc = require(word && report, "vk_magnus_expand")) return rc;
  return guarded([&] { *report = dup_string(varkit::reports::magnus_expand(word, letters, cutoff)); });
}

vk_status vk_magnus_test(const char* word, int32_t letters, int32_t cutoff, int32_t test_n, int32_t* in_dn,
                         char** report) {
  if (auto rc = require(word && in_dn && report, "vk_magnus_test")) return rc;
  return guarded([&] {
    auto out = varkit::reports::magnus_test(word, letters, cutoff, test_n);
    *in_dn = out.in_dn ? 1 : 0;
    *report = dup_string(out.report);
  });
}

vk_status vk_dimsub_report(const vk_rep* group, const char* coeff, int32_t nmax, int32_t with_gamma,
                           char** report) {
  if (auto rc = require(group && coeff && report, "vk_dimsub_report")) return rc;
  return guarded([&] {
    *report = dup_string(
        varkit::reports::dimsub_report(group->rep, varkit::textio::parse_coeff(coeff), nmax, with_gamma != 0));
  });
}

vk_status vk_identities_of_algebra(const char* algebra_text, int32_t degree, char** report) {
  if (auto rc = require(algebra_text && report, "vk_identities_of_algebra")) return rc;
  return guarded([&] {
    auto basis = varkit::textio::parse_algebra(algebra_text);
    *report = dup_string(varkit::reports::identities_of_algebra(basis, degree));
  });
}

vk_status vk_identities_of_rep(const vk_rep* rep, int32_t degree, char** report) {
  if (auto rc = require(rep && report, "vk_identities_of_rep")) return rc;
  return guarded([&] { *report = dup_string(varkit::reports::identities_of_rep(rep->rep, degree)); });
}

vk_status vk_check_identity(const vk_rep* rep, const char* spec, int32_t* holds, char** report) {
  if (auto rc = require(rep && spec && holds && report, "vk_check_identity")) return rc;
  return guarded([&] {
    auto out = varkit::reports::check_identity(rep->rep, spec);
    *holds = out.holds ? 1 : 0;
    *report = dup_string(out.report);
  });
}

vk_status vk_verbal_report(const vk_rep* group, const char* coeff, const char* generators, char** report) {
  if (auto rc = require(group && coeff && generators && report, "vk_verbal_report")) return rc;
  return guarded([&] {
    *report = dup_string(
        varkit::reports::verbal_report(group->rep, varkit::textio::parse_coeff(coeff), generators));
  });
}

} // extern "C"
