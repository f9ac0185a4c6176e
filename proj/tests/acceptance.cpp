// Runs the ten acceptance criteria with exact checks and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "verona/cli/commands.hpp"

using namespace verona;
using verona::oracle::Rng;

namespace {

using Check = std::function<std::string()>;  // empty string on success

std::string describe(std::size_t p, std::size_t c, int trial) {
  return "p=" + std::to_string(p) + " c=" + std::to_string(c) + " trial " + std::to_string(trial);
}

std::vector<ProjParam> as_proj(const std::vector<Scalar>& ts) { return {ts.begin(), ts.end()}; }

/// Polynomial automorphism y_k = x_k + f_k(x_{k+1}, ..., x_n); its Jacobian is unitriangular.
Matrix<MultiPoly> triangular_jacobian(Rng& rng, std::size_t n, int degree, int terms) {
  Matrix<MultiPoly> j(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly f;
    for (int s = 0; s < terms; ++s) {
      Monomial m{};
      int left = static_cast<int>(rng.integer(1, degree));
      for (std::size_t v = k + 1; v < n && left > 0; ++v) {
        const int e = static_cast<int>(rng.integer(0, left));
        m[v] = static_cast<std::uint8_t>(e);
        left -= e;
      }
      if (m != Monomial{}) f += MultiPoly::monomial(m, Scalar(rng.integer(-2, 2)));
    }
    j(k, k) = MultiPoly(1);
    for (std::size_t v = k + 1; v < n; ++v) j(k, v) = f.derivative(v);
  }
  return j;
}

/// Unitriangular matrix with sparse affine entries above the diagonal.
Matrix<MultiPoly> unitriangular(Rng& rng, std::size_t n, int density) {
  Matrix<MultiPoly> e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    e(i, i) = MultiPoly(1);
    for (std::size_t k = i + 1; k < n; ++k)
      if (rng.integer(0, density) == 0) e(i, k) = rng.poly(n, 1, 1, 2);
  }
  return e;
}

std::string pencil_exactness() {
  Rng rng(1001);
  for (std::size_t p = 2; p <= 5; ++p)
    for (std::size_t c = 1; c <= 3; ++c)
      for (int trial = 0; trial < 50; ++trial) {
        const auto spaces = oracle::random_general_position(rng, p, c);
        const auto params = rng.distinct_rationals(p);
        const GrassCurve curve = pencil_curve(pencil_interpolate(spaces, params));
        for (std::size_t i = 0; i < p; ++i)
          if (eval_curve(curve, ProjParam(params[i])) != spaces[i]) return describe(p, c, trial) + ": eval(t_i) != F_i";
        if (eval_curve(curve, ProjParam::infinity()) != spaces[p]) return describe(p, c, trial) + ": eval(inf) != F_{p+1}";
      }
  return {};
}

std::string uniqueness() {
  Rng rng(1002);
  // (a) G and G + Delta give the same pencil pointwise at 2q + 3 = 5 parameters.
  for (std::size_t p = 2; p <= 5; ++p)
    for (std::size_t c = 1; c <= 3; ++c)
      for (int trial = 0; trial < 5; ++trial) {
        const auto spaces = oracle::random_general_position(rng, p, c);
        const Pencil base = pencil_interpolate(spaces, rng.distinct_rationals(p));
        std::vector<QVector> v(c);
        for (auto& x : v) {
          x.resize(p * c);
          for (auto& entry : x) entry = rng.rational();
        }
        const Pencil other = apply_delta(base, v);
        for (long s = -2; s <= 2; ++s)
          if (eval_pencil(base, ProjParam(Scalar(s) / 3)) != eval_pencil(other, ProjParam(Scalar(s) / 3)))
            return describe(p, c, trial) + ": G + Delta changes the pencil";
        const ImageComparison cmp = compare_pencil_images(normalize_pencil(base), normalize_pencil(other));
        if (!cmp.lemma_equal || !cmp.sampled_equal) return describe(p, c, trial) + ": normalized images differ";
      }
  // (b) altering one t_i (i >= 3) after normalization changes the image.
  for (std::size_t p = 3; p <= 5; ++p)
    for (std::size_t c = 1; c <= 3; ++c)
      for (int trial = 0; trial < 5; ++trial) {
        const auto spaces = oracle::random_general_position(rng, p, c);
        std::vector<Scalar> params{Scalar(0), Scalar(1)};
        while (params.size() < p) {
          const Scalar t = rng.rational(9);
          if (std::find(params.begin(), params.end(), t) == params.end()) params.push_back(t);
        }
        const std::size_t i = static_cast<std::size_t>(rng.integer(2, static_cast<long>(p) - 1));
        std::vector<Scalar> altered = params;
        do altered[i] += 1;
        while (std::count(altered.begin(), altered.end(), altered[i]) > 1);
        const Pencil a = pencil_interpolate(spaces, params), b = pencil_interpolate(spaces, altered);
        const ImageComparison cmp = compare_pencil_images(a, b);
        if (cmp.lemma_equal || cmp.sampled_equal) return describe(p, c, trial) + ": altered parameter kept the image";
      }
  return {};
}

std::string veronese_duality() {
  Rng rng(1003);
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t n_dim = 1; n_dim <= 2; ++n_dim)
      for (int trial = 0; trial < 10; ++trial) {
        const auto dual = oracle::random_general_position(rng, p, n_dim);
        std::vector<Subspace> spaces;
        for (const auto& d : dual) spaces.push_back(annihilator(d));
        const auto params = rng.distinct_rationals(p);
        const GrassCurve ver = veronese_interpolate(spaces, params);
        const std::string where = describe(p, n_dim, trial);
        if (ver.actual_degree() != static_cast<long>(p) - 1) return where + ": degree is not p-1";
        for (std::size_t i = 0; i < p; ++i)
          if (eval_curve(ver, ProjParam(params[i])) != spaces[i]) return where + ": eval(t_i) != F_i";
        if (eval_curve(ver, ProjParam::infinity()) != spaces[p]) return where + ": eval(inf) != F_{p+1}";
        const GrassCurve pen = pencil_curve(pencil_interpolate(dual, params));
        std::size_t checked = 0;
        for (long k = 0; checked < 2 * p + 1; ++k) {
          const Scalar s = Scalar(3 * k - 7) / 4;
          if (std::find(params.begin(), params.end(), s) != params.end()) continue;
          ++checked;
          if (annihilator(eval_curve(ver, ProjParam(s))) != eval_curve(pen, ProjParam(s)))
            return where + ": duality square fails at t = " + to_string(s);
        }
        if (p == 3 && n_dim == 1) {
          if (!is_veronese_curve(ver)) return where + ": not a Veronese curve";
          const QMatrix q = conic_form(ver);
          for (long k = -4; k <= 4; ++k) {
            const QVector v = eval_curve(ver, ProjParam(Scalar(k) / 2)).basis_vector(0);
            Scalar value = 0;
            for (std::size_t a = 0; a < 3; ++a)
              for (std::size_t b = 0; b < 3; ++b) value += v[a] * q(a, b) * v[b];
            if (!is_zero(value)) return where + ": sampled point off the conic";
          }
        }
      }
  return {};
}

std::string vandermonde_sampling() {
  Rng rng(1004);
  for (std::size_t p = 2; p <= 4; ++p) {
    const VeroneseWebSpec web = gz_local_model(p).web;
    for (int trial = 0; trial < 20; ++trial) {
      const auto ts = rng.distinct_rationals(p + 1);
      if (!sample_web(web, as_proj(ts), QVector(p)).general_position)
        return "p=" + std::to_string(p) + " trial " + std::to_string(trial) + ": not in general position";
      std::vector<Scalar> repeated(ts.begin(), ts.begin() + static_cast<long>(p));
      repeated[static_cast<std::size_t>(rng.integer(1, static_cast<long>(p) - 1))] = repeated[0];
      if (!is_zero(vdm_det(repeated))) return "p=" + std::to_string(p) + ": vdm_det nonzero with a repeat";
    }
  }
  return {};
}

std::string gz_model() {
  for (std::size_t p = 2; p <= 4; ++p) {
    const GzModel model = gz_local_model(p);
    const auto beta = gz_beta(p);
    for (const auto& entry : contract(model.pencil, beta))
      if (!entry.is_zero()) return "p=" + std::to_string(p) + ": Pi_t beta_t is not zero";
    for (long k = -2; k <= 2; ++k) {
      const Scalar t = Scalar(2 * k + 1) / 3;
      QVector value(beta.size());
      for (std::size_t a = 0; a < beta.size(); ++a) value[a] = beta[a](t);
      if (pencil_kernel(model.pencil, t) != span_of({value}, beta.size()))
        return "p=" + std::to_string(p) + ": kernel differs from beta at t = " + to_string(t);
    }
  }
  return {};
}

std::string calculus_laws() {
  Rng rng(1006);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 2));
    const PolyForm w = rng.form(n, k, 3);
    if (!exterior_derivative(exterior_derivative(w)).is_zero()) return "d d != 0, trial " + std::to_string(trial);
    const PolyForm a = rng.form(n, k, 3), b = rng.form(n, 1, 2);
    if (k + 2 <= n) {
      const MultiPoly sign = k % 2 == 0 ? MultiPoly(1) : MultiPoly(-1);
      if (exterior_derivative(wedge(a, b)) != wedge(exterior_derivative(a), b) + sign * wedge(a, exterior_derivative(b)))
        return "Leibniz fails, trial " + std::to_string(trial);
    }
    const auto x = rng.field(n, n, 3), y = rng.field(n, n, 3), z = rng.field(n, n, 2);
    if (lie_bracket(x, y) + lie_bracket(y, x) != PolyVectorField(n)) return "antisymmetry fails, trial " + std::to_string(trial);
    const auto jacobi = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    if (!jacobi.is_zero()) return "Jacobi fails, trial " + std::to_string(trial);
  }
  return {};
}

std::string bracket_expansion() {
  Rng rng(1007);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const MultiPoly t = MultiPoly::variable(n);
    const OperatorField g = rng.operator_field(n, 2);
    const auto vi = rng.field(n, n, 2), vj = rng.field(n, n, 2);
    const auto gi = apply(g, vi), gj = apply(g, vj);
    const auto lhs = lie_bracket(gi - t * vi, gj - t * vj);
    const auto delta = lie_bracket(gi, vj) + lie_bracket(vi, gj);
    if (lhs != lie_bracket(gi, gj) - t * delta + t * t * lie_bracket(vi, vj))
      return "identity fails, trial " + std::to_string(trial);
  }
  return {};
}

std::string nijenhuis_checks() {
  Rng rng(1008);
  // Constant diagonalizable G and constant Turiel operators.
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t p = 3, c = static_cast<std::size_t>(rng.integer(1, 2)), n = p * c;
    const auto spaces = oracle::random_general_position(rng, p, c);
    const auto params = rng.distinct_rationals(p);
    const OperatorField g = turiel_operator(spaces[p], std::vector<Subspace>(spaces.begin(), spaces.begin() + p), params);
    const auto x = rng.field(n, n, 2), y = rng.field(n, n, 2);
    if (!nijenhuis(g, x, y).is_zero()) return "constant Turiel operator has torsion, trial " + std::to_string(trial);
  }
  // Polynomial Turiel operators: G = t_i on the coordinate blocks of a polynomial automorphism.
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t p = static_cast<std::size_t>(rng.integer(2, 3)), c = static_cast<std::size_t>(rng.integer(1, 2));
    const std::size_t n = p * c;
    const Matrix<MultiPoly> jac = triangular_jacobian(rng, n, 2, 2);
    const OperatorField g = turiel_operator(adjugate(jac), c, rng.distinct_rationals(p));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (!nijenhuis(g, PolyVectorField::coordinate(n, a), PolyVectorField::coordinate(n, b)).is_zero())
          return "polynomial Turiel operator has torsion, trial " + std::to_string(trial);
  }
  // Random polynomial G against the coordinate tensor formula.
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
    const OperatorField g = rng.operator_field(n, 2);
    const auto x = rng.field(n, n, 2), y = rng.field(n, n, 2);
    if (nijenhuis(g, x, y) != oracle::nijenhuis_tensor_oracle(g, x, y))
      return "torsion differs from the tensor formula, trial " + std::to_string(trial);
  }
  return {};
}

std::string panasiuk_corpus(std::string& summary) {
  Rng rng(1009);
  std::vector<std::pair<std::string, DistributionFamily>> corpus;
  for (std::size_t p : {3u, 4u})
    for (std::size_t c : {1u, 2u}) {
      const std::size_t n = p * c;
      std::vector<Scalar> eig;
      for (std::size_t i = 0; i < p; ++i) eig.push_back(Scalar(static_cast<long>(i) + 1));
      const std::string tag = "p=" + std::to_string(p) + " c=" + std::to_string(c);
      // Integrable: coordinate frame of a polynomial automorphism.
      corpus.emplace_back(tag + " automorphism", family_from_frame(adjugate(triangular_jacobian(rng, n, 2, 1)), c, eig));
      // Generic unitriangular frames.
      corpus.emplace_back(tag + " frame", family_from_frame(unitriangular(rng, n, 2 * static_cast<int>(c)), c, eig));
      // Webs: the flat model and a perturbed coframe.
      VeroneseWebSpec flat{p, c, {}}, bent{p, c, {}};
      for (std::size_t i = 0; i < c; ++i) {
        flat.coframe.emplace_back();
        bent.coframe.emplace_back();
        for (std::size_t j = 0; j < p; ++j) {
          const std::size_t row = i * p + j;
          flat.coframe.back().push_back(PolyForm::basis(n, {row}));
          PolyForm gamma = PolyForm::basis(n, {row});
          if (row + 1 < n) gamma.add({row + 1 + static_cast<std::size_t>(rng.integer(0, static_cast<long>(n - row - 2)))},
                                     MultiPoly::variable(static_cast<std::size_t>(rng.integer(0, static_cast<long>(row)))));
          bent.coframe.back().push_back(gamma);
        }
      }
      corpus.emplace_back(tag + " flat web", family_from_web(flat));
      corpus.emplace_back(tag + " bent web", family_from_web(bent));
      corpus.emplace_back(tag + " frame 2", family_from_frame(unitriangular(rng, n, 3 * static_cast<int>(c)), c, eig));
    }
  std::size_t integrable = 0;
  for (const auto& [name, family] : corpus) {
    std::vector<ProjParam> samples{ProjParam(0), ProjParam::infinity()};
    for (std::size_t k = 0; k < family.p; ++k) samples.emplace_back(Scalar(2 * static_cast<long>(k) + 1) / 2);
    const PanasiukReport rep = panasiuk_verify(family, samples);
    if (!rep.theorem_consistent) return name + ": sampled verdicts disagree with the minor test";
    if (!rep.representations_agree.value_or(false)) return name + ": covariant and contravariant verdicts differ";
    if (!rep.degree_bounds_hold) return name + ": t-degree bound exceeded";
    if (!rep.torsion_consistent.value_or(false)) return name + ": integrable samples with nonzero torsion";
    if (rep.family_integrable) ++integrable;
  }
  summary = std::to_string(corpus.size()) + " families, " + std::to_string(integrable) + " integrable";
  if (integrable == 0 || integrable == corpus.size()) return "corpus is one-sided (" + summary + ")";
  return {};
}

std::string cli_determinism() {
  namespace fs = std::filesystem;
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(VERONA_SCENARIO_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const std::string doc = cli::read_file(entry.path().string());
    const std::string first = cli::render_json(cli::run_document(doc));
    if (first != cli::render_json(cli::run_document(doc))) return entry.path().filename().string() + ": bytes differ";
    ++count;
  }
  if (count == 0) return "no scenarios found";
  const std::string cmd = std::string("\"") + VERONA_BINARY + "\" selftest --corpus \"" + VERONA_SCENARIO_DIR + "\" > /dev/null";
  const int status = std::system(cmd.c_str());
  if (status != 0) return "verona selftest failed";
  return {};
}

}  // namespace

int main() {
  const auto begin = std::chrono::steady_clock::now();
  std::string panasiuk_summary;
  const std::vector<std::pair<std::string, Check>> criteria{
      {"pencil interpolation exactness", pencil_exactness},
      {"uniqueness of normalized pencils", uniqueness},
      {"Veronese duality", veronese_duality},
      {"Van der Monde sampling", vandermonde_sampling},
      {"GZ local model", gz_model},
      {"exterior calculus and bracket laws", calculus_laws},
      {"bracket expansion in t", bracket_expansion},
      {"Nijenhuis torsion", nijenhuis_checks},
      {"p+2 parameter theorem corpus", [&] { return panasiuk_corpus(panasiuk_summary); }},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = criteria[k].second();
    } catch (const std::exception& err) {
      problem = std::string("exception: ") + err.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%2zu] %s (%.2f s)", problem.empty() ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs);
    if (k == 8 && !panasiuk_summary.empty()) std::printf(" [%s]", panasiuk_summary.c_str());
    if (!problem.empty()) std::printf(": %s", problem.c_str());
    std::printf("\n");
    if (!problem.empty()) ++failures;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  std::printf("%zu/%zu criteria passed in %.2f s\n", criteria.size() - failures, criteria.size(), total);
  if (total >= 60) {
    std::printf("FAIL time budget: %.2f s exceeds 60 s\n", total);
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
