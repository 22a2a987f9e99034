// Command-line front end. Talks to the library exclusively through the
// public C API.
//
// Exit codes: 0 all checks passed, 1 checks ran and some failed (witnesses
// are in the report), 2 usage / parse / resource errors.
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "gyro/gyro.h"

namespace {

struct Common {
  std::string format = "human";
  int64_t limit = 0;  // 0 = library default
};

int emit(gyro_report* report, const Common& common) {
  gyro_format fmt = common.format == "structured" ? GYRO_FORMAT_STRUCTURED
                                                  : GYRO_FORMAT_HUMAN;
  char* text = nullptr;
  gyro_status st = gyro_report_render(report, fmt, &text);
  if (st != GYRO_OK) {
    std::fprintf(stderr, "gyro: failed to render report (%s)\n",
                 gyro_status_name(st));
    gyro_report_free(report);
    return 2;
  }
  std::fputs(text, stdout);
  gyro_string_free(text);
  int ok = gyro_report_all_passed(report);
  gyro_report_free(report);
  return ok ? 0 : 1;
}

int bail(gyro_status st, char* errmsg) {
  std::fprintf(stderr, "gyro: error: %s (%s)\n",
               errmsg ? errmsg : "unknown failure", gyro_status_name(st));
  gyro_string_free(errmsg);
  return 2;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  cmd->add_option("--limit", common.limit,
                  "Carrier size limit (default 4096)")
      ->envname("GYRO_LIMIT_N");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gyrogroup toolkit: table verification, subgyrogroup and coset "
      "machinery, the Einstein-ball identity suite, and subset-algebra "
      "checks"};
  app.require_subcommand(1);

  Common common;

  // verify
  std::string verify_input;
  auto* verify = app.add_subcommand("verify", "Verify a Cayley-table file");
  verify->add_option("--input", verify_input, "Table file")->required();
  add_common(verify, common);

  // subgyro
  std::string subgyro_input;
  auto* subgyro = app.add_subcommand(
      "subgyro", "Enumerate and classify subgyrogroups of a table");
  subgyro->add_option("--input", subgyro_input, "Table file")->required();
  add_common(subgyro, common);

  // cosets
  std::string cosets_input, cosets_subset;
  bool cosets_diag = false;
  auto* cosets =
      app.add_subcommand("cosets", "Left-coset partition for a subgyrogroup");
  cosets->add_option("--input", cosets_input, "Table file")->required();
  cosets->add_option("--subset", cosets_subset,
                     "Subgyrogroup as comma-separated indices, e.g. 0,2")
      ->required();
  cosets->add_flag("--diagnostic", cosets_diag,
                   "Report the raw coset family and overlaps instead of "
                   "requiring the L-property");
  add_common(cosets, common);

  // einstein
  gyro_einstein_params eparams{1.0, 1e-9, 0.99, 10000, 1729};
  auto* einstein = app.add_subcommand(
      "einstein", "Run the sampled identity suite on the Einstein ball");
  einstein->add_option("--c", eparams.c, "Ball radius")
      ->capture_default_str();
  einstein->add_option("--tol", eparams.tol, "Identity-check tolerance")
      ->capture_default_str();
  einstein->add_option("--max-beta", eparams.max_beta,
                       "Speed cap as a fraction of c")
      ->capture_default_str();
  einstein->add_option("--samples", eparams.samples, "Sampled tuples")
      ->capture_default_str();
  einstein->add_option("--seed", eparams.seed, "Sampler seed")
      ->capture_default_str();
  add_common(einstein, common);

  // setcheck
  std::string sc_input, sc_check;
  std::string sc_w, sc_u, sc_v, sc_h;
  int32_t sc_g = -1;
  bool sc_force = false;
  int32_t sc_scan_limit = 0;
  auto* setcheck =
      app.add_subcommand("setcheck", "Subset-algebra checks over a table");
  setcheck->add_option("--input", sc_input, "Table file")->required();
  setcheck
      ->add_option("--check", sc_check,
                   "assoc | inverse-bound | neutrality | double-chain | "
                   "coadd-chain | scan")
      ->required()
      ->check(CLI::IsMember({"assoc", "inverse-bound", "neutrality",
                             "double-chain", "coadd-chain", "scan"}));
  setcheck->add_option("--W", sc_w, "Subset W, e.g. 0,1");
  setcheck->add_option("--U", sc_u, "Subset U");
  setcheck->add_option("--V", sc_v, "Subset V");
  setcheck->add_option("--H", sc_h, "Subgyrogroup H");
  setcheck->add_option("--g", sc_g, "Element g for coadd-chain");
  setcheck->add_flag("--force", sc_force,
                     "Run assoc even when V is not gyr-invariant");
  setcheck->add_option("--scan-limit", sc_scan_limit,
                       "Max carrier size for scan (default 6)");
  add_common(setcheck, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  gyro_report* report = nullptr;
  char* errmsg = nullptr;
  gyro_status st = GYRO_OK;

  if (verify->parsed()) {
    st = gyro_run_verify(verify_input.c_str(), common.limit, &report, &errmsg);
  } else if (subgyro->parsed()) {
    st = gyro_run_subgyro(subgyro_input.c_str(), common.limit, &report,
                          &errmsg);
  } else if (cosets->parsed()) {
    st = gyro_run_cosets(cosets_input.c_str(), cosets_subset.c_str(),
                         cosets_diag ? 1 : 0, common.limit, &report, &errmsg);
  } else if (einstein->parsed()) {
    st = gyro_run_einstein(&eparams, &report, &errmsg);
  } else if (setcheck->parsed()) {
    gyro_setcheck_params params{};
    params.check = sc_check.c_str();
    params.set_w = sc_w.empty() ? nullptr : sc_w.c_str();
    params.set_u = sc_u.empty() ? nullptr : sc_u.c_str();
    params.set_v = sc_v.empty() ? nullptr : sc_v.c_str();
    params.set_h = sc_h.empty() ? nullptr : sc_h.c_str();
    params.g_elem = sc_g;
    params.force = sc_force ? 1 : 0;
    params.scan_limit = sc_scan_limit;
    st = gyro_run_setcheck(sc_input.c_str(), &params, common.limit, &report,
                           &errmsg);
  }

  if (st != GYRO_OK) return bail(st, errmsg);
  return emit(report, common);
}
