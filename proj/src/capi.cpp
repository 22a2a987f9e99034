#include "gyro/gyro.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "commands.hpp"
#include "core_algebra.hpp"
#include "einstein.hpp"
#include "finite_table.hpp"

struct gyro_table_s {
  gyro::FiniteGyrogroup g;
};

struct gyro_report_s {
  gyro::RunResult r;
};

namespace {

gyro_status map_code(gyro::errc code) {
  using gyro::errc;
  switch (code) {
    case errc::invalid_argument: return GYRO_ERROR_INVALID_ARGUMENT;
    case errc::parse_error: return GYRO_ERROR_PARSE;
    case errc::index_out_of_range: return GYRO_ERROR_INDEX_OUT_OF_RANGE;
    case errc::resource_limit: return GYRO_ERROR_RESOURCE_LIMIT;
    case errc::not_a_group: return GYRO_ERROR_NOT_A_GROUP;
    case errc::not_a_subgyrogroup: return GYRO_ERROR_NOT_A_SUBGYROGROUP;
    case errc::not_an_l_subgyrogroup: return GYRO_ERROR_NOT_AN_L_SUBGYROGROUP;
    case errc::precondition_unmet: return GYRO_ERROR_PRECONDITION_UNMET;
    case errc::parent_mismatch: return GYRO_ERROR_PARENT_MISMATCH;
    case errc::outside_ball: return GYRO_ERROR_OUTSIDE_BALL;
    case errc::mismatched_c: return GYRO_ERROR_MISMATCHED_C;
    case errc::tolerance_not_positive: return GYRO_ERROR_TOLERANCE_NOT_POSITIVE;
    case errc::partition_failure: return GYRO_ERROR_PARTITION_FAILURE;
    case errc::empty_subset: return GYRO_ERROR_EMPTY_SUBSET;
    case errc::io_error: return GYRO_ERROR_IO;
  }
  return GYRO_ERROR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_errmsg(char** errmsg, const std::string& text) {
  if (errmsg) *errmsg = dup_string(text);
}

// Runs fn, translating exceptions into status codes + message.
template <class F>
gyro_status guarded(char** errmsg, F&& fn) {
  try {
    fn();
    return GYRO_OK;
  } catch (const gyro::Error& e) {
    set_errmsg(errmsg, e.what());
    return map_code(e.code());
  } catch (const std::exception& e) {
    set_errmsg(errmsg, e.what());
    return GYRO_ERROR_INTERNAL;
  }
}

int effective_limit(int64_t limit) {
  if (limit <= 0) return gyro::kDefaultLimit;
  if (limit > gyro::kDefaultLimit) return gyro::kDefaultLimit;
  return (int)limit;
}

gyro::Velocity make_velocity(const double u[3], double c) {
  return gyro::Velocity(gyro::Vec3{u[0], u[1], u[2]}, c);
}

void store_vec(const gyro::Velocity& v, double out[3]) {
  out[0] = v.vec().x;
  out[1] = v.vec().y;
  out[2] = v.vec().z;
}

}  // namespace

extern "C" {

const char* gyro_status_name(gyro_status status) {
  switch (status) {
    case GYRO_OK: return "ok";
    case GYRO_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case GYRO_ERROR_PARSE: return "parse-error";
    case GYRO_ERROR_INDEX_OUT_OF_RANGE: return "index-out-of-range";
    case GYRO_ERROR_RESOURCE_LIMIT: return "resource-limit";
    case GYRO_ERROR_NOT_A_GROUP: return "not-a-group";
    case GYRO_ERROR_NOT_A_SUBGYROGROUP: return "not-a-subgyrogroup";
    case GYRO_ERROR_NOT_AN_L_SUBGYROGROUP: return "not-an-l-subgyrogroup";
    case GYRO_ERROR_PRECONDITION_UNMET: return "precondition-unmet";
    case GYRO_ERROR_PARENT_MISMATCH: return "parent-mismatch";
    case GYRO_ERROR_OUTSIDE_BALL: return "outside-ball";
    case GYRO_ERROR_MISMATCHED_C: return "mismatched-c";
    case GYRO_ERROR_TOLERANCE_NOT_POSITIVE: return "tolerance-not-positive";
    case GYRO_ERROR_PARTITION_FAILURE: return "partition-failure";
    case GYRO_ERROR_EMPTY_SUBSET: return "empty-subset";
    case GYRO_ERROR_IO: return "io-error";
    case GYRO_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void gyro_string_free(char* s) { std::free(s); }

gyro_status gyro_table_load(const char* path, int64_t limit, gyro_table** out,
                            char** errmsg) {
  if (!path || !out) {
    set_errmsg(errmsg, "path and out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    *out = new gyro_table_s{
        gyro::load_gyrogroup(path, effective_limit(limit))};
  });
}

gyro_status gyro_table_parse(const char* text, int64_t limit, gyro_table** out,
                             char** errmsg) {
  if (!text || !out) {
    set_errmsg(errmsg, "text and out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    std::istringstream in{std::string(text)};
    auto [n, add] = gyro::read_table(in);
    auto [verdict, g] = gyro::verify_table(n, add, effective_limit(limit));
    if (!verdict.valid) {
      const auto& f = verdict.failures.front();
      gyro::fail(gyro::errc::invalid_argument,
                 "not a gyrogroup table: " + f.axiom + " fails (" + f.detail +
                     ")");
    }
    *out = new gyro_table_s{std::move(*g)};
  });
}

void gyro_table_free(gyro_table* t) { delete t; }

int32_t gyro_table_order(const gyro_table* t) { return t ? t->g.n() : -1; }

int32_t gyro_table_identity(const gyro_table* t) {
  return t ? t->g.zero() : -1;
}

static bool in_range(const gyro_table* t, int32_t x) {
  return t && x >= 0 && x < t->g.n();
}

int32_t gyro_table_add(const gyro_table* t, int32_t a, int32_t b) {
  if (!in_range(t, a) || !in_range(t, b)) return -1;
  return t->g.add(a, b);
}

int32_t gyro_table_neg(const gyro_table* t, int32_t a) {
  if (!in_range(t, a)) return -1;
  return t->g.neg(a);
}

int32_t gyro_table_gyr(const gyro_table* t, int32_t a, int32_t b, int32_t c) {
  if (!in_range(t, a) || !in_range(t, b) || !in_range(t, c)) return -1;
  return t->g.gyr(a, b, c);
}

int32_t gyro_table_coadd(const gyro_table* t, int32_t a, int32_t b) {
  if (!in_range(t, a) || !in_range(t, b)) return -1;
  return gyro::coadd(t->g, a, b);
}

int32_t gyro_table_gyration_count(const gyro_table* t) {
  return t ? t->g.gyr_pool_size() : -1;
}

gyro_status gyro_einstein_gamma(const double u[3], double c, double* out,
                                char** errmsg) {
  if (!u || !out) {
    set_errmsg(errmsg, "u and out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg,
                 [&] { *out = gyro::gamma_factor(make_velocity(u, c)); });
}

gyro_status gyro_einstein_add(const double u[3], const double v[3], double c,
                              double out[3], char** errmsg) {
  if (!u || !v || !out) {
    set_errmsg(errmsg, "u, v, out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    store_vec(gyro::einstein_add(make_velocity(u, c), make_velocity(v, c)),
              out);
  });
}

gyro_status gyro_einstein_gyr(const double u[3], const double v[3],
                              const double w[3], double c, double out[3],
                              char** errmsg) {
  if (!u || !v || !w || !out) {
    set_errmsg(errmsg, "u, v, w, out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    gyro::EinsteinGyrogroup ball(gyro::EinsteinConfig{.c = c});
    store_vec(gyro::gyr_apply(ball, make_velocity(u, c), make_velocity(v, c),
                              make_velocity(w, c)),
              out);
  });
}

gyro_status gyro_einstein_coadd(const double u[3], const double v[3], double c,
                                double out[3], char** errmsg) {
  if (!u || !v || !out) {
    set_errmsg(errmsg, "u, v, out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    gyro::EinsteinGyrogroup ball(gyro::EinsteinConfig{.c = c});
    store_vec(gyro::coadd(ball, make_velocity(u, c), make_velocity(v, c)),
              out);
  });
}

gyro_status gyro_run_verify(const char* path, int64_t limit, gyro_report** out,
                            char** errmsg) {
  if (!path || !out) {
    set_errmsg(errmsg, "path and out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    *out = new gyro_report_s{
        gyro::run_verify({path, effective_limit(limit)})};
  });
}

gyro_status gyro_run_subgyro(const char* path, int64_t limit,
                             gyro_report** out, char** errmsg) {
  if (!path || !out) {
    set_errmsg(errmsg, "path and out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    *out = new gyro_report_s{
        gyro::run_subgyro({path, effective_limit(limit)})};
  });
}

gyro_status gyro_run_cosets(const char* path, const char* subset,
                            int diagnostic, int64_t limit, gyro_report** out,
                            char** errmsg) {
  if (!path || !subset || !out) {
    set_errmsg(errmsg, "path, subset, out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    *out = new gyro_report_s{gyro::run_cosets(
        {path, subset, diagnostic != 0, effective_limit(limit)})};
  });
}

gyro_status gyro_run_einstein(const gyro_einstein_params* params,
                              gyro_report** out, char** errmsg) {
  if (!params || !out) {
    set_errmsg(errmsg, "params and out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    gyro::EinsteinOptions opt;
    opt.cfg.c = params->c;
    opt.cfg.tol = params->tol;
    opt.cfg.max_beta = params->max_beta;
    opt.cfg.seed = params->seed;
    opt.samples = params->samples;
    *out = new gyro_report_s{gyro::run_einstein(opt)};
  });
}

gyro_status gyro_run_setcheck(const char* path,
                              const gyro_setcheck_params* params,
                              int64_t limit, gyro_report** out, char** errmsg) {
  if (!path || !params || !params->check || !out) {
    set_errmsg(errmsg, "path, params, params->check, out must be non-NULL");
    return GYRO_ERROR_INVALID_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    gyro::SetcheckOptions opt;
    opt.input = path;
    opt.check = params->check;
    if (params->set_w) opt.set_w = params->set_w;
    if (params->set_u) opt.set_u = params->set_u;
    if (params->set_v) opt.set_v = params->set_v;
    if (params->set_h) opt.set_h = params->set_h;
    if (params->g_elem >= 0) opt.g_elem = params->g_elem;
    opt.force = params->force != 0;
    opt.limit = effective_limit(limit);
    if (params->scan_limit > 0) opt.scan_limit = params->scan_limit;
    *out = new gyro_report_s{gyro::run_setcheck(opt)};
  });
}

int gyro_report_all_passed(const gyro_report* report) {
  return report && report->r.all_passed ? 1 : 0;
}

gyro_status gyro_report_render(const gyro_report* report, gyro_format format,
                               char** out) {
  if (!report || !out) return GYRO_ERROR_INVALID_ARGUMENT;
  std::string text = format == GYRO_FORMAT_STRUCTURED
                         ? gyro::render_structured(report->r.doc)
                         : gyro::render_human(report->r);
  *out = dup_string(text);
  return *out ? GYRO_OK : GYRO_ERROR_INTERNAL;
}

void gyro_report_free(gyro_report* report) { delete report; }

}  // extern "C"
