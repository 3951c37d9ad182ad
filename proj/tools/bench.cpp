// Compares the OpenMP sample sweeps against the serial reference path on
// inflated workloads, and confirms both produce identical reports.
//
// Usage: kahler_bench [samples] [max_degree]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "kahler/derivation.hpp"
#include "kahler/parse.hpp"
#include "kahler/symmetric.hpp"
#include "kahler/wext.hpp"

using namespace kahler;

namespace {

using Clock = std::chrono::steady_clock;

double run_timed(const std::function<std::vector<CheckReport>()>& f,
                 std::vector<CheckReport>& out) {
  auto t0 = Clock::now();
  out = f();
  auto t1 = Clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same_reports(const std::vector<CheckReport>& a,
                  const std::vector<CheckReport>& b) {
  return reports_to_json(a) == reports_to_json(b);
}

void bench_one(const char* name,
               const std::function<std::vector<CheckReport>(const CheckConfig&)>& suite,
               CheckConfig cfg) {
  cfg.parallel = false;
  std::vector<CheckReport> serial_out, parallel_out;
  double serial_s =
      run_timed([&] { return suite(cfg); }, serial_out);
  cfg.parallel = true;
  double parallel_s =
      run_timed([&] { return suite(cfg); }, parallel_out);
  const char* match = same_reports(serial_out, parallel_out) ? "yes" : "NO";
  std::printf("%-22s %10.3fs %10.3fs %8.2fx   %s\n", name, serial_s,
              parallel_s, serial_s / parallel_s, match);
}

}  // namespace

int main(int argc, char** argv) {
  CheckConfig cfg;
  cfg.samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  cfg.max_degree = argc > 2
                       ? static_cast<std::uint32_t>(std::atoi(argv[2]))
                       : 5;
  cfg.seed = 42;

  auto ctx = make_context({"x", "y", "z"}, MonomialOrder::degrevlex,
                          Field::rationals());

  std::printf("samples=%zu  max_degree=%u  vars=3\n\n",
              static_cast<std::size_t>(cfg.samples), cfg.max_degree);
  std::printf("%-22s %11s %11s %9s   %s\n", "suite", "serial", "parallel",
              "speedup", "identical");

  bench_one("codifferential", [&](const CheckConfig& c) {
    return check_codifferential_axioms(ctx, c);
  }, cfg);
  bench_one("monad-laws", [&](const CheckConfig& c) {
    return check_monad_laws(ctx, c);
  }, cfg);
  bench_one("alt-characterization", [&](const CheckConfig& c) {
    return check_alt_characterization(ctx, c);
  }, cfg);

  // a derivation law sweep over a curve, to pull module arithmetic in
  auto plane = make_context({"x", "y"}, MonomialOrder::degrevlex,
                            Field::rationals());
  auto circle = AlgebraPresentation::make(
      "Circle", plane, {parse_poly("x^2 + y^2 - 1", plane)});
  auto m = ModulePresentation::free_module(circle, 1);
  auto rot = Derivation::make(
      circle, m,
      {m->element({parse_poly("y", circle->context())}),
       m->element({parse_poly("-x", circle->context())})});
  auto cand = DerivationCandidate::of(rot, "rotation");
  bench_one("leibniz-on-curve", [&](const CheckConfig& c) {
    return std::vector<CheckReport>{check_leibniz(cand, c)};
  }, cfg);
  bench_one("beck-T-derivation", [&](const CheckConfig& c) {
    return std::vector<CheckReport>{check_beck_T_derivation(cand, c)};
  }, cfg);

  return 0;
}
