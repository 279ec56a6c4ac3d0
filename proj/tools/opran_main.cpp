// Command line front end for the operator range toolkit.
//
// Commands: decide, enlarge, shells, member (file driven), and the
// verification runs family, perturb, stability, counterexample.
// Exit codes: 0 success (admitted / verified), 1 input or schema error,
// 2 construction precondition failure, 3 refutation or failed check.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "opran/constants.hpp"
#include "opran/decomp.hpp"
#include "opran/errors.hpp"
#include "opran/range_ops.hpp"
#include "opran/range_rep.hpp"
#include "opran/rng.hpp"
#include "opran/serialize.hpp"
#include "opran/unitary.hpp"

namespace {

using opran::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitRefuted = 3;

void emit(const Json& report, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw opran::ParseError("cannot open output file: " + output_path);
  out << report.dump(2) << "\n";
}

int cmd_decide(const std::string& input, const std::string& output) {
  opran::RangeRep rep =
      opran::range_rep_from_json(opran::load_json_file(input), "rep");
  bool admits = opran::admits_disjoint_unitary(rep);
  std::optional<std::size_t> witness = opran::vneu_witness(rep);
  Json report{{"admits", admits},
              {"witness", witness ? Json(*witness) : Json(nullptr)},
              {"closed", rep.is_closed()},
              {"dense", rep.is_dense()}};
  emit(report, output);
  return admits ? kExitOk : kExitRefuted;
}

int cmd_enlarge(const std::string& input, const std::string& output) {
  opran::RangeRep rep =
      opran::range_rep_from_json(opran::load_json_file(input), "rep");
  emit(opran::range_rep_to_json(opran::enlarge(rep)), output);
  return kExitOk;
}

int cmd_shells(const std::string& input, const std::string& output, double tol) {
  opran::ComplexMatrix t =
      opran::matrix_from_json(opran::load_json_file(input), "matrix");
  opran::NumericRangeRep rep = opran::range_shells(t, tol);
  opran::AdjointShellReport pair = opran::adjoint_range_shells(t, tol);
  Json report{{"shells", pair.shells},
              {"adjoint_shells", pair.adjoint_shells},
              {"kernel_dim", pair.kernel_dim},
              {"adjoint_kernel_dim", pair.adjoint_kernel_dim},
              {"scale_shift", rep.scale_shift},
              {"range_rep", opran::range_rep_to_json(rep.to_symbolic())}};
  emit(report, output);
  return kExitOk;
}

int cmd_member(const std::string& input, const std::string& output) {
  opran::SeqVector x =
      opran::seqvector_from_json(opran::load_json_file(input), "vector");
  bool member = opran::canonical_membership(x);
  std::optional<opran::Rational> norm = opran::weighted_norm_sq(x, opran::Rational(4));
  Json report{{"member", member},
              {"norm4", Json{{"finite", norm.has_value()},
                             {"value", norm ? Json(opran::rational_to_string(*norm))
                                            : Json(nullptr)}}}};
  emit(report, output);
  return member ? kExitOk : kExitRefuted;
}

// Verification runs: each returns a report with an "all_pass" flag; the
// dispatcher maps a failed check to the refutation exit code.

Json verify_family(std::size_t dim, std::size_t grid) {
  if (dim < 2) throw opran::ContractError("family needs ambient dimension at least 2");
  opran::ComplexMatrix p(dim, 1), q(dim, 1);
  p(0, 0) = 1.0;
  q(1, 0) = 1.0;
  opran::RotationFamilySpec spec{opran::Subspace(p), opran::Subspace(q)};
  opran::Subspace line(p);

  double half_pi = std::numbers::pi / 2;
  std::vector<opran::ComplexMatrix> reflections, rotations;
  for (std::size_t i = 0; i < grid; ++i) {
    double t = half_pi * static_cast<double>(i) / static_cast<double>(grid);
    reflections.push_back(opran::selfadjoint_unitary_family(spec, t));
    rotations.push_back(
        opran::rotation_group(spec, 2 * t));  // grid over [0, pi) for the group
  }

  bool structure_ok = true, involution_ok = true, reflection_disjoint = true;
  for (const auto& u : reflections) {
    structure_ok = structure_ok && u.is_unitary(opran::constants::kUnitaryTol) &&
                   u.is_hermitian(opran::constants::kHermitianTol);
    involution_ok =
        involution_ok && (u * u - opran::ComplexMatrix::identity(dim)).frobenius_norm() <=
                             opran::constants::kGroupLawTol * static_cast<double>(dim);
  }
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = i + 1; j < grid; ++j)
      reflection_disjoint =
          reflection_disjoint &&
          opran::verify_disjoint(reflections[i].adjoint() * reflections[j], line);

  bool law_ok = true, lipschitz_ok = true, group_disjoint = true;
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = i + 1; j < grid; ++j) {
      double ti = std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid);
      double tj = std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid);
      opran::ComplexMatrix composed = rotations[i] * rotations[j];
      opran::ComplexMatrix direct = opran::rotation_group(spec, ti + tj);
      law_ok = law_ok && opran::operator_norm(direct - composed) <=
                             opran::constants::kGroupLawTol;
      lipschitz_ok = lipschitz_ok && opran::operator_norm(rotations[i] - rotations[j]) <=
                                         std::abs(ti - tj) + opran::constants::kBoundSlack;
      group_disjoint = group_disjoint &&
                       opran::verify_disjoint(rotations[i].adjoint() * rotations[j], line);
    }

  bool all = structure_ok && involution_ok && reflection_disjoint && law_ok && lipschitz_ok &&
             group_disjoint;
  return Json{{"kind", "family"},
              {"dim", dim},
              {"grid", grid},
              {"reflection", Json{{"unitary_hermitian_ok", structure_ok},
                                  {"involution_ok", involution_ok},
                                  {"pairwise_disjoint_ok", reflection_disjoint}}},
              {"group", Json{{"law_ok", law_ok},
                             {"lipschitz_ok", lipschitz_ok},
                             {"pairwise_disjoint_ok", group_disjoint}}},
              {"all_pass", all}};
}

Json verify_perturb(std::size_t dim, std::size_t count, double eps, std::size_t k,
                    std::uint64_t seed) {
  opran::Rng rng(seed);
  opran::ComplexMatrix points = rng.gaussian_matrix(dim, count);
  double lo = 1.0 / static_cast<double>(k), hi = static_cast<double>(k);
  for (std::size_t j = 0; j < count; ++j) {
    double target = lo + (hi - lo) * rng.uniform();
    double norm = 0;
    for (std::size_t i = 0; i < dim; ++i) norm += std::norm(points(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < dim; ++i) points(i, j) *= target / norm;
  }
  opran::ComplexMatrix v = rng.random_unitary(dim);
  opran::PerturbationResult res = opran::perturbation_rotation(points, v, eps, k);
  bool deviation_ok = res.deviation_from_identity <= eps + opran::constants::kBoundSlack;
  bool distance_ok = res.min_pair_distance >= res.delta - opran::constants::kBoundSlack;
  return Json{{"kind", "perturb"},
              {"dim", dim},
              {"points", count},
              {"eps", eps},
              {"k", k},
              {"seed", seed},
              {"delta", res.delta},
              {"w_deviation", res.deviation_from_identity},
              {"min_distance", res.min_pair_distance},
              {"cover_size", res.cover_size},
              {"deviation_ok", deviation_ok},
              {"distance_ok", distance_ok},
              {"all_pass", deviation_ok && distance_ok}};
}

Json verify_stability(std::size_t m, std::size_t samples, std::uint64_t seed) {
  opran::InterleavedPair pair = opran::interleaved_counterexample(m);
  opran::StabilityBound bound = opran::stability_epsilon(pair.t, pair.v);
  opran::ComplexMatrix t2 = pair.t * pair.t;
  double floor = bound.delta * bound.delta / 4.0;
  opran::Rng rng(seed);
  std::size_t violations = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    opran::ComplexMatrix w =
        rng.random_unitary_near_identity(pair.t.rows(), bound.epsilon);
    opran::ComplexMatrix conj = w * pair.v;
    std::vector<double> lambda =
        opran::hermitian_eigenvalues(t2 + conj * t2 * conj.adjoint());
    if (lambda.back() < floor - opran::constants::kBoundSlack) ++violations;
  }
  return Json{{"kind", "stability"},
              {"m", m},
              {"samples", samples},
              {"seed", seed},
              {"delta", bound.delta},
              {"epsilon", bound.epsilon},
              {"lower_bound", floor},
              {"violations", violations},
              {"all_pass", violations == 0}};
}

Json verify_counterexample(std::size_t m) {
  opran::InterleavedPair pair = opran::interleaved_counterexample(m);
  std::size_t dim = pair.t.rows();
  bool swap_ok = pair.v.is_unitary(opran::constants::kUnitaryTol) &&
                 (pair.v * pair.v - opran::ComplexMatrix::identity(dim)).frobenius_norm() <=
                     opran::constants::kGroupLawTol * static_cast<double>(dim);
  bool full_rank = opran::numeric_rank(opran::range_sum(pair.t, pair.v * pair.t),
                                       opran::constants::kRankRelTol) == dim;
  std::vector<std::size_t> r_dims, s_dims;
  for (const auto& s : pair.r_shells) r_dims.push_back(s.dim());
  for (const auto& s : pair.s_shells) s_dims.push_back(s.dim());

  Json ladder = Json::array();
  double min_delta = 0, max_delta = 0;
  for (std::size_t scale : {m, 2 * m, 4 * m}) {
    opran::InterleavedPair larger = opran::interleaved_counterexample(scale);
    double delta = opran::stability_epsilon(larger.t, larger.v).delta;
    ladder.push_back(Json{{"m", scale}, {"delta", delta}});
    min_delta = min_delta == 0 ? delta : std::min(min_delta, delta);
    max_delta = std::max(max_delta, delta);
  }
  bool stable = (max_delta - min_delta) < 0.10 * min_delta;
  bool all = swap_ok && full_rank && stable;
  return Json{{"kind", "counterexample"},
              {"m", m},
              {"ambient_dim", dim},
              {"r_shell_dims", r_dims},
              {"s_shell_dims", s_dims},
              {"swap_involution_ok", swap_ok},
              {"range_sum_full_rank", full_rank},
              {"delta_ladder", ladder},
              {"delta_stable", stable},
              {"all_pass", all}};
}

int run_verify(const Json& report, const std::string& output) {
  emit(report, output);
  return report.at("all_pass").get<bool>() ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator range toolkit: decide unitary disjointness, inspect spectral "
               "shells, verify rotation constructions"};
  app.require_subcommand(1);

  std::string input, output;
  double tol = opran::constants::kDefaultKernelTol;
  std::size_t dim = 2, pdim = 16, grid = 10, points = 4, k = 2, m = 8;
  std::size_t samples = opran::constants::kStabilitySamples;
  double eps = 0.3;
  std::uint64_t seed = 1;

  CLI::App* decide = app.add_subcommand("decide", "decide whether a unitary can move the range off itself");
  decide->add_option("--input", input, "range rep JSON file")->required();
  decide->add_option("--output", output, "write the report here instead of stdout");

  CLI::App* enlarge = app.add_subcommand("enlarge", "dense extension with full-size graded components");
  enlarge->add_option("--input", input, "range rep JSON file")->required();
  enlarge->add_option("--output", output, "write the result here instead of stdout");

  CLI::App* shells = app.add_subcommand("shells", "spectral shell structure of a matrix and its adjoint");
  shells->add_option("--input", input, "matrix JSON file")->required();
  shells->add_option("--tol", tol, "relative kernel cut");
  shells->add_option("--output", output, "write the report here instead of stdout");

  CLI::App* member = app.add_subcommand("member", "exact membership in the weight-4 graded range");
  member->add_option("--input", input, "sequence vector JSON file")->required();
  member->add_option("--output", output, "write the report here instead of stdout");

  CLI::App* family = app.add_subcommand("family", "verify the reflection family and rotation group");
  family->add_option("--dim", dim, "ambient dimension (default 2)");
  family->add_option("--grid", grid, "parameter grid size (default 10)");
  family->add_option("--output", output, "write the report here instead of stdout");

  CLI::App* perturb = app.add_subcommand("perturb", "verify the small-rotation separation construction");
  perturb->add_option("--dim", pdim, "ambient dimension (default 16)");
  perturb->add_option("--points", points, "point count (default 4)");
  perturb->add_option("--eps", eps, "rotation angle in (0,1] (default 0.3)");
  perturb->add_option("--k", k, "norm bound: point norms in [1/k, k] (default 2)");
  perturb->add_option("--seed", seed, "RNG seed (default 1)");
  perturb->add_option("--output", output, "write the report here instead of stdout");

  CLI::App* stability = app.add_subcommand("stability", "verify the range-sum stability bound by sampling");
  stability->add_option("--m", m, "truncation index (default 8)");
  stability->add_option("--samples", samples, "Monte Carlo sample count");
  stability->add_option("--seed", seed, "RNG seed (default 1)");
  stability->add_option("--output", output, "write the report here instead of stdout");

  CLI::App* counterexample = app.add_subcommand("counterexample", "build and check the interleaved two-copy pair");
  counterexample->add_option("--m", m, "truncation index (default 8)");
  counterexample->add_option("--output", output, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide->parsed()) return cmd_decide(input, output);
    if (enlarge->parsed()) return cmd_enlarge(input, output);
    if (shells->parsed()) return cmd_shells(input, output, tol);
    if (member->parsed()) return cmd_member(input, output);
    if (family->parsed()) return run_verify(verify_family(dim, grid), output);
    if (perturb->parsed())
      return run_verify(verify_perturb(pdim, points, eps, k, seed), output);
    if (stability->parsed()) return run_verify(verify_stability(m, samples, seed), output);
    if (counterexample->parsed()) return run_verify(verify_counterexample(m), output);
  } catch (const opran::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const opran::PreconditionError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const opran::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
