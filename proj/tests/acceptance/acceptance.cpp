// Acceptance run: one PASS/FAIL line per criterion, zero tolerance.
//   jordan_acceptance [--criterion N ...]

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "jordan/contract.hpp"
#include "jordan/decompose.hpp"
#include "jordan/errors.hpp"
#include "jordan/hopf.hpp"
#include "jordan/io.hpp"
#include "jordan/presentation.hpp"
#include "oracle.hpp"
#include "reference.hpp"

using namespace jordan;

namespace {

std::ostream& out = std::cout;

const Catalog& cat() { return default_catalog(); }

std::string entry_text(const Scalar& s) { return s.is_zero() ? std::string("0") : s.str(); }

// Reports each differing entry (1-based); returns the number of differences.
std::size_t compare(const Matrix& expected, const Matrix& got, const std::string& what) {
  if (expected.rows() != got.rows() || expected.cols() != got.cols()) {
    out << "  " << what << ": size " << got.rows() << "x" << got.cols() << ", expected " << expected.rows() << "x"
        << expected.cols() << "\n";
    return expected.rows() * expected.cols();
  }
  std::size_t bad = 0;
  for (std::size_t r = 0; r < got.rows(); ++r)
    for (std::size_t c = 0; c < got.cols(); ++c)
      if (!(expected(r, c) == got(r, c))) {
        ++bad;
        out << "  " << what << " (" << r + 1 << "," << c + 1 << "): printed " << entry_text(expected(r, c))
            << ", computed " << entry_text(got(r, c)) << "\n";
      }
  return bad;
}

bool line(bool ok, const std::string& text) {
  out << "  [" << (ok ? "ok" : "FAIL") << "] " << text << "\n";
  return ok;
}

// ---- 1 ---------------------------------------------------------------------

Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// J3 and J- of the lower bounded module from the closed series action on |m>,
// truncated to the first n states.
std::pair<Matrix, Matrix> series_action(const Rational& beta, std::size_t n) {
  const long size = static_cast<long>(n);
  Matrix j3(n, n), jm(n, n);
  for (long m = 0; m < size; ++m) {
    j3(m, m) = Scalar(beta + 2 * m);
    if (m >= 1) jm(m - 1, m) = Scalar::sqrt_of(m) * Scalar(Rational(-(beta + m - 1)));
    Rational c = 1;  // (2z)^k / k! without the z power
    for (long k = 1; m - 1 + k < size; ++k) {
      c = c * 2 / k;
      const Scalar zk(ZPolynomial::monomial(c, static_cast<int>(k)));
      // sqrt((m+k)!/m!) and sqrt((m+k-1)!/m!)
      std::uint64_t full = 1, short_ = 1;
      for (long i = m + 1; i <= m + k; ++i) full *= static_cast<std::uint64_t>(i);
      for (long i = m + 1; i <= m + k - 1; ++i) short_ *= static_cast<std::uint64_t>(i);
      if (m + k < size) {
        j3(m + k, m) += zk * Scalar::sqrt_of(full) * Scalar(Rational(frac(2 * m, k + 1) + beta / 2));
        jm(m + k, m) -= zk * Scalar::sqrt_of(full) * Scalar(ZPolynomial::monomial(Rational(beta * beta / 8), 1));
      }
      if (m >= 1) jm(m - 1 + k, m) -= zk * Scalar::sqrt_of(short_) * Scalar(Rational(m * (frac(m - 1, k + 1) + beta / 2)));
    }
  }
  return {j3, jm};
}

bool criterion_1() {
  std::size_t total = 0, differing = 0;
  for (const auto& ref : reference::quotient_modules()) {
    Representation rep = quotient_rep("uzsl2", {{"beta", ref.beta}});
    const std::string tag = "beta=" + std::to_string(ref.beta) + " ";
    const Matrix jp = oracle::from_rows(ref.jp), jm = oracle::from_rows(ref.jm), j3 = oracle::from_rows(ref.j3);
    total += 3 * jp.rows() * jp.cols();
    std::size_t bad = compare(jp, rep.matrix("Jp"), tag + "J+") + compare(jm, rep.matrix("Jm"), tag + "J-") +
                      compare(j3, rep.matrix("J3"), tag + "J3");
    differing += bad;
    auto [s3, sm] = series_action(Rational(ref.beta), rep.dim());
    line(s3 == rep.matrix("J3") && sm == rep.matrix("Jm"),
         tag + "computed matrices equal the closed series action truncated to the quotient");
    if (bad) {
      Representation printed = rep;
      printed.generators["Jp"].m = jp;
      printed.generators["Jm"].m = jm;
      printed.generators["J3"].m = j3;
      RelationReport report = check_relations(printed, cat().presentation("uzsl2"));
      for (const auto& r : report.results)
        if (!r.passed) line(false, tag + "printed matrices violate " + r.name + (r.entry ? " at (" + std::to_string(r.entry->first + 1) + "," + std::to_string(r.entry->second + 1) + ")" : std::string()));
      line(check_relations(rep, cat().presentation("uzsl2")).passed(), tag + "computed matrices satisfy every relation");
    }
  }
  out << "  " << total - differing << " of " << total << " printed entries reproduced, " << differing << " differ\n";
  return differing == 0;
}

// ---- 2 ---------------------------------------------------------------------

bool criterion_2() {
  bool ok = true;
  const HopfData& h = cat().hopf("uzsl2");
  std::vector<std::pair<int, const reference::Rows*>> cases{{-1, &reference::r_matrix_doublet()},
                                                            {-2, &reference::r_matrix_triplet()}};
  for (auto [beta, rows] : cases) {
    Representation rep = quotient_rep("uzsl2", {{"beta", beta}});
    Matrix r = evaluate_R(h, rep, rep).m;
    const std::string tag = std::to_string(r.rows()) + "x" + std::to_string(r.cols()) + " ";
    ok &= line(compare(oracle::from_rows(*rows), r, tag + "R") == 0, tag + "R-matrix equals the printed one");
    ok &= line(check_qybe(r), tag + "R12 R13 R23 = R23 R13 R12");
    std::size_t mutants = 0, killed = 0;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        if (i == j) continue;
        Matrix bad = r;
        bad(i, j) += r(i, j).is_zero() ? Scalar::z(static_cast<int>(1 + (i + j) % 3)) : Scalar(1L);
        ++mutants;
        if (!check_qybe(bad)) ++killed;
      }
    ok &= line(killed == mutants, tag + std::to_string(killed) + " of " + std::to_string(mutants) +
                                      " single-entry perturbations fail QYBE");
  }
  return ok;
}

// ---- 3 ---------------------------------------------------------------------

bool criterion_3() {
  bool ok = true;
  const Presentation& sl = cat().presentation("uzsl2");
  const std::vector<std::pair<int, Rational>> finite{{-1, Rational(3, 2)}, {-2, Rational(4)}, {-3, Rational(15, 2)}};
  for (auto [beta, expected] : finite) {
    CasimirResult c = casimir_value(quotient_rep("uzsl2", {{"beta", beta}}), sl);
    ok &= line(c.is_scalar && c.value == Scalar(expected),
               "quotient beta=" + std::to_string(beta) + ": C = " + c.value.str() + ", expected " + to_string(expected));
  }
  for (int beta = -1; beta >= -6; --beta) {
    Rational b(beta), expected = b * (b / 2 - 1);
    Realization r = realization("gd-quantum", {{"beta", b}});
    CasimirResult sym = casimir_value(r, sl);
    CasimirResult mat = casimir_value(fock_rep(r, 6, 4), sl);
    ok &= line(sym.is_scalar && sym.value == Scalar(expected) && mat.is_scalar && mat.value == Scalar(expected),
               "boson realization beta=" + std::to_string(beta) + ": C = " + sym.value.str() + " (operator), " +
                   mat.value.str() + " (cutoff 6), expected " + to_string(expected));
  }
  std::mt19937 rng(1729);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  auto draw = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  const Presentation& h4 = cat().presentation("uzh4");
  for (int i = 0; i < 5; ++i) {
    Rational beta = draw(), delta = draw();
    Rational expected = delta * (2 * beta - 1);
    Realization r = realization("h4-quantum", {{"beta", beta}, {"delta", delta}});
    CasimirResult sym = casimir_value(r, h4);
    CasimirResult mat = casimir_value(fock_rep(r, 5, 4), h4);
    ok &= line(sym.is_scalar && sym.value == Scalar(expected) && mat.is_scalar && mat.value == Scalar(expected),
               "h4 beta=" + to_string(beta) + " delta=" + to_string(delta) + ": C = " + sym.value.str() +
                   ", expected " + to_string(expected));
  }
  return ok;
}

// ---- 4 ---------------------------------------------------------------------

Params sample_params(const RealizationSpec& spec) {
  Params p;
  for (const auto& name : spec.params) {
    if (name == "beta") p[name] = Rational(-5, 3);
    if (name == "delta") p[name] = Rational(7, 2);
    if (name == "alpha") p[name] = Rational(3, 4);
  }
  return p;
}

bool criterion_4() {
  bool ok = true;
  for (const auto& [id, spec] : cat().realizations()) {
    Realization r = realization(id, sample_params(spec));
    const Presentation& pres = cat().presentation(spec.algebra);
    std::string detail = id + " (" + spec.algebra + ", " + format_params(r.params) + "): operator";
    bool good = check_relations(r, pres).passed();
    for (std::size_t cutoff : {4u, 6u, 8u}) {
      RelationReport rep = check_relations(fock_rep(r, cutoff, 4), pres);
      good &= rep.passed();
      detail += " cutoff" + std::to_string(cutoff) + (rep.passed() ? "" : "!");
      if (!rep.passed()) out << rep.str();
    }
    ok &= line(good, detail);
  }
  return ok;
}

// ---- 5 ---------------------------------------------------------------------

Vector grid(const reference::Poly& p, std::size_t dim2, std::size_t size) {
  Vector v(size);
  for (const auto& [mono, coeff] : p) v[mono.first * dim2 + mono.second] += parse_scalar(coeff);
  return v;
}

std::vector<Vector> deformed(const std::vector<reference::Combination>& combos, const std::vector<Vector>& classical) {
  std::vector<Vector> out;
  for (const auto& combo : combos) {
    Vector v(classical[0].size());
    for (const auto& [idx, coeff] : combo) {
      Scalar c = parse_scalar(coeff);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * classical[idx][i];
    }
    out.push_back(v);
  }
  return out;
}

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + entry_text(v[i]);
  return s + "]";
}

// Compares the computed component vectors with printed ones in order; names as E_-k, U_-k.
std::size_t compare_vectors(const DecompositionResult& d, const std::vector<Vector>& printed, const Representation& rep,
                            const std::string& tag) {
  std::size_t bad = 0, k = 0;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    std::vector<Vector> printed_span;
    for (std::size_t n = 0; n < d.components[c].vectors.size(); ++n) printed_span.push_back(printed[k + n]);
    bool span_ok = is_invariant(printed_span, rep);
    for (std::size_t n = 0; n < d.components[c].vectors.size(); ++n, ++k) {
      const std::string name = std::string(c == 0 ? "E" : "U") + "_-" + std::to_string(n + 1);
      const Vector& got = d.components[c].vectors[n];
      if (got == printed[k]) {
        line(true, tag + name + " reproduced");
        continue;
      }
      ++bad;
      line(false, tag + name + " printed " + vector_text(printed[k]) + ", computed " + vector_text(got));
    }
    if (!span_ok) line(false, tag + "printed span of component " + std::to_string(c + 1) + " is not invariant");
  }
  return bad;
}

bool criterion_5() {
  bool ok = true;
  {
    const std::size_t dim2 = 2, size = 4;
    std::vector<Vector> cl;
    for (const auto& p : reference::half_half_classical()) cl.push_back(grid(p, dim2, size));
    std::vector<Vector> printed = deformed(reference::half_half_deformed(), cl);
    Representation rep = tensor_product_rep("uzsl2", 1, 1);
    DecompositionResult d = decompose_product("uzsl2", 1, 1, std::nullopt, {{0, cl[3]}});
    ok &= line(d.labels() == std::vector<int>{2, 0}, "1/2 x 1/2 = 1 + 0");
    ok &= compare_vectors(d, printed, rep, "1/2 x 1/2 ") == 0;
    std::string bd = check_block_diagonal(d, rep);
    ok &= line(bd.empty(), "1/2 x 1/2 change of basis block-diagonalizes every generator" + (bd.empty() ? "" : " (fails on " + bd + ")"));
    ok &= line(check_flip_symmetry(d), "1/2 x 1/2 components are stable under swap composed with z -> -z");
  }
  {
    const std::size_t dim2 = 2, size = 6;
    std::vector<Vector> cl;
    for (const auto& p : reference::one_half_classical()) cl.push_back(grid(p, dim2, size));
    std::vector<Vector> printed = deformed(reference::one_half_deformed(), cl);
    Representation rep = tensor_product_rep("uzsl2", 2, 1);
    DecompositionResult d = decompose_product("uzsl2", 2, 1, std::nullopt, {{1, cl[4]}});
    ok &= line(d.labels() == std::vector<int>{3, 1}, "1 x 1/2 = 3/2 + 1/2");
    std::size_t bad = compare_vectors(d, printed, rep, "1 x 1/2 ");
    ok &= bad == 0;
    std::string bd = check_block_diagonal(d, rep);
    ok &= line(bd.empty(), "1 x 1/2 change of basis block-diagonalizes every generator" + (bd.empty() ? "" : " (fails on " + bd + ")"));
    // Why the printed vectors cannot be right: a lowest vector must be killed by Delta(J+).
    Vector killed = jordan::apply(rep.matrix("Jp"), printed[4]);
    bool zero = true;
    for (const auto& s : killed) zero = zero && s.is_zero();
    line(zero, "printed U_-1 is annihilated by Delta(J+): image " + vector_text(killed));
    line(is_invariant({printed[0], printed[1], printed[2], printed[3]}, rep), "printed E_-1..E_-4 span an invariant subspace");
    line(spans_equal({printed[0], printed[1], printed[2], printed[3]}, d.components[0].vectors),
         "printed E_-1..E_-4 span the computed spin-3/2 space");
    // Neither reading the deformation parameter with the opposite sign rescues them.
    std::vector<Vector> flipped = printed;
    for (auto& v : flipped)
      for (auto& s : v) s = s.reflected();
    line(is_invariant({flipped[0], flipped[1], flipped[2], flipped[3]}, rep) && is_invariant({flipped[4], flipped[5]}, rep),
         "printed vectors with z -> -z span invariant subspaces");
  }
  return ok;
}

// ---- 6 ---------------------------------------------------------------------

bool criterion_6() {
  bool ok = true;
  for (const auto& id : ContractionScheme::shipped()) {
    ContractionScheme s = ContractionScheme::load(id);
    Params p = id == "sl2-to-poincare" ? Params{{"alpha", Rational(5, 3)}} : Params{{"beta", Rational(-2, 7)}, {"delta", Rational(9, 4)}};
    for (const auto& [src, tgt] : s.realizations) {
      bool eq = false;
      std::string why;
      try {
        Realization c = contract_realization(src, s, p);
        Realization expected = realization(tgt, c.params);
        eq = true;
        for (const auto& g : c.order)
          if (!(c.at(g) == expected.at(g))) {
            eq = false;
            why += " " + g + ": " + c.at(g).str() + " vs " + expected.at(g).str();
          }
      } catch (const Error& e) {
        why = e.what();
      }
      ok &= line(eq, id + ": " + src + " -> " + tgt + why);
    }
    for (const auto& alg : {s.source_classical, s.source_quantum}) {
      const Presentation& tp = cat().presentation(s.target_of(alg));
      Word c = contract_casimir(*cat().presentation(alg).casimir, s, alg);
      ok &= line(equal_modulo_commutation(c, *tp.casimir, tp.commuting),
                 id + ": Casimir of " + alg + " -> " + c.str() + " (target " + tp.casimir->str() + ")");
      HopfComparison cmp = compare_hopf(contract_hopf(cat().hopf(alg), s), cat().hopf(tp.id));
      std::string failed;
      for (const auto& [name, good] : cmp.items)
        if (!good) failed += " " + name;
      ok &= line(cmp.passed(), id + ": Hopf data of " + alg + " -> " + tp.id + (failed.empty() ? "" : ", differs in" + failed));
    }
  }
  return ok;
}

// ---- 7 ---------------------------------------------------------------------

bool hopf_line(const HopfReport& r, const std::string& what) {
  if (!r.passed()) out << r.str();
  return line(r.passed(), what + " (" + std::to_string(r.results.size()) + " checks)");
}

bool criterion_7() {
  bool ok = true;
  for (int beta = -1; beta >= -3; --beta) {
    Representation rep = quotient_rep("uzsl2", {{"beta", beta}});
    ok &= hopf_line(check_hopf_axioms(cat().hopf("uzsl2"), rep), "uzsl2 axioms, quotient beta=" + std::to_string(beta));
  }
  for (auto [beta, delta] : {std::pair{-1, 0}, std::pair{-1, 1}, std::pair{-2, 0}, std::pair{0, 2}}) {
    Params p{{"beta", beta}, {"delta", delta}};
    Representation rep = quotient_rep("uzsl2ext", p);
    ok &= hopf_line(check_hopf_axioms(cat().hopf("uzsl2ext"), rep),
                    "uzsl2ext axioms, quotient " + format_params(p) + " (dim " + std::to_string(rep.dim()) + ")");
  }
  Representation poincare = fock_rep(realization("poincare-quantum", {{"alpha", Rational(2, 3)}}), 4, 4);
  ok &= hopf_line(check_hopf_axioms(cat().hopf("uzpoincare"), poincare), "uzpoincare axioms, cutoff-4 block");
  Representation h4 = fock_rep(realization("h4-quantum", {{"beta", Rational(1, 2)}, {"delta", Rational(3)}}), 4, 4);
  ok &= hopf_line(check_hopf_axioms(cat().hopf("uzh4"), h4), "uzh4 axioms, cutoff-4 block");
  for (int beta : {-1, -2}) {
    Representation rep = quotient_rep("uzsl2", {{"beta", beta}});
    Operator r = evaluate_R(cat().hopf("uzsl2"), rep, rep);
    ok &= hopf_line(check_intertwiner(r, cat().hopf("uzsl2"), rep, rep), "uzsl2 R Delta R^-1 = flipped Delta, beta=" + std::to_string(beta));
  }
  {
    Representation a = quotient_rep("uzsl2", {{"beta", -1}}), b = quotient_rep("uzsl2", {{"beta", -2}});
    Operator r = evaluate_R(cat().hopf("uzsl2"), a, b);
    ok &= hopf_line(check_intertwiner(r, cat().hopf("uzsl2"), a, b), "uzsl2 intertwiner on 1/2 x 1");
  }
  {
    Operator r = evaluate_R(cat().hopf("uzh4"), h4, h4);
    ok &= hopf_line(check_intertwiner(r, cat().hopf("uzh4"), h4, h4), "uzh4 intertwiner, cutoff-4 block");
  }
  {
    Representation ext = quotient_rep("uzsl2ext", {{"beta", -1}, {"delta", 1}});
    Operator r = evaluate_R(cat().hopf("uzsl2ext"), ext, ext);
    ok &= hopf_line(check_intertwiner(r, cat().hopf("uzsl2ext"), ext, ext), "uzsl2ext intertwiner, quotient dim 3");
  }
  return ok;
}

// ---- 8 ---------------------------------------------------------------------

bool same_matrices(const Representation& a, const Representation& b) {
  for (const auto& g : a.order)
    if (!(a.certified_block(a.matrix(g)) == b.certified_block(b.matrix(g)))) return false;
  return true;
}

// Undeformed coproduct X (x) 1 + 1 (x) X from plain Kronecker products.
bool primitive_coproduct(const Representation& d0, const Representation& c) {
  const std::size_t n = c.dim();
  for (const auto& g : c.order) {
    Matrix expected = kron(c.matrix(g), oracle::identity(n)) + kron(oracle::identity(n), c.matrix(g));
    if (!(d0.certified_block(d0.matrix(g)) == d0.certified_block(expected))) return false;
  }
  return true;
}

bool criterion_8() {
  bool ok = true;
  {
    Representation lim = classical_limit(quotient_rep("uzsl2", {{"beta", -1}}));
    const auto& ref = reference::classical_doublet();
    ok &= line(lim.matrix("Jp") == oracle::from_rows(ref.jp) && lim.matrix("Jm") == oracle::from_rows(ref.jm) &&
                   lim.matrix("J3") == oracle::from_rows(ref.j3),
               "z -> 0 of the deformed doublet equals the printed undeformed doublet");
  }
  for (int beta = -1; beta >= -4; --beta) {
    Representation lim = classical_limit(quotient_rep("uzsl2", {{"beta", beta}}));
    oracle::Sl2Module s = oracle::classical_sl2(Rational(beta), lim.dim());
    Representation direct = quotient_rep("sl2", {{"beta", beta}});
    ok &= line(lim.matrix("Jp") == s.jp && lim.matrix("J3") == s.j3 && lim.matrix("Jm") == s.jm && same_matrices(lim, direct),
               "quotient beta=" + std::to_string(beta) + " at z = 0 equals the undeformed module");
  }
  for (Rational beta : {Rational(1, 2), Rational(-5, 3), Rational(4)}) {
    Representation lim = classical_limit(fock_rep(realization("gd-quantum", {{"beta", beta}}), 6, 4));
    oracle::Sl2Module s = oracle::classical_sl2(beta, 6);
    ok &= line(lim.certified_block(lim.matrix("Jp")) == s.jp && lim.certified_block(lim.matrix("J3")) == s.j3 &&
                   lim.certified_block(lim.matrix("Jm")) == s.jm,
               "lowest weight module beta=" + to_string(beta) + " at z = 0 equals the undeformed action (cutoff 6)");
  }
  const std::vector<std::pair<std::string, std::string>> pairs{{"gd-quantum", "gd-classical"},
                                                               {"two-boson-quantum", "two-boson-classical"},
                                                               {"poincare-quantum", "poincare-classical"},
                                                               {"ext-quantum", "ext-classical"},
                                                               {"h4-quantum", "h4-classical"}};
  for (const auto& [q, c] : pairs) {
    const RealizationSpec& spec = cat().realization(q);
    Realization rq = realization(q, sample_params(spec)), rc = realization(c, sample_params(spec));
    bool eq = true;
    for (const auto& g : rq.order) eq = eq && specialize_z0(rq.at(g)) == rc.at(g);
    ok &= line(eq, q + " at z = 0 equals " + c);
  }
  {
    // Undeformed 1/2 x 1/2 basis: 1, (x+y)/2, xy and (x-y)/2.
    std::vector<Vector> cl;
    for (const auto& p : reference::half_half_classical()) cl.push_back(grid(p, 2, 4));
    DecompositionResult at0 = decompose_product("uzsl2", 1, 1, Rational(0));
    DecompositionResult classical = decompose_product("sl2", 1, 1);
    std::vector<Vector> got0, gotc;
    for (const auto& c : at0.components) got0.insert(got0.end(), c.vectors.begin(), c.vectors.end());
    for (const auto& c : classical.components) gotc.insert(gotc.end(), c.vectors.begin(), c.vectors.end());
    ok &= line(got0 == cl && gotc == cl, "1/2 x 1/2 basis at z = 0 equals the undeformed coupled basis");
  }
  for (int beta : {-1, -2}) {
    Representation rep = quotient_rep("uzsl2", {{"beta", beta}});
    Representation d0 = specialize(coproduct_rep(rep, rep, cat().hopf("uzsl2")), Rational(0));
    ok &= line(primitive_coproduct(d0, classical_limit(rep)), "uzsl2 coproduct at z = 0 is primitive, beta=" + std::to_string(beta));
    Matrix r0 = specialize(evaluate_R(cat().hopf("uzsl2"), rep, rep).m, Rational(0));
    ok &= line(r0 == oracle::identity(r0.rows()), "R at z = 0 is the identity, beta=" + std::to_string(beta));
  }
  {
    Representation ext = quotient_rep("uzsl2ext", {{"beta", -1}, {"delta", 1}});
    Representation d0 = specialize(coproduct_rep(ext, ext, cat().hopf("uzsl2ext")), Rational(0));
    ok &= line(primitive_coproduct(d0, classical_limit(ext)), "uzsl2ext coproduct at z = 0 is primitive");
  }
  for (const auto& [alg, id] : {std::pair<std::string, std::string>{"uzpoincare", "poincare-quantum"}, {"uzh4", "h4-quantum"}}) {
    Representation rep = fock_rep(realization(id, sample_params(cat().realization(id))), 3, 4);
    Representation d0 = specialize(coproduct_rep(rep, rep, cat().hopf(alg)), Rational(0));
    ok &= line(primitive_coproduct(d0, classical_limit(rep)), alg + " coproduct at z = 0 is primitive (cutoff-3 block)");
  }
  for (int bp = 2; bp <= 5; ++bp) {
    Representation lim = classical_limit(monomial_rep("uzsl2", Rational(bp)));
    ok &= line(same_matrices(lim, monomial_rep("sl2", Rational(bp))),
               "polynomial module beta_+=" + std::to_string(bp) + " at z = 0 equals the undeformed one");
  }
  return ok;
}

// ---- 9 ---------------------------------------------------------------------

bool criterion_9() {
  bool ok = true;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const std::string tag = half_integer(a) + " x " + half_integer(b);
      std::vector<int> rule;
      for (int t = a + b; t >= std::abs(a - b); t -= 2) rule.push_back(t);
      try {
        Representation rep = tensor_product_rep("uzsl2", a, b);
        DecompositionResult d = decompose(rep);
        std::string labels;
        for (int t : d.labels()) labels += (labels.empty() ? "" : " + ") + half_integer(t);
        bool good = d.labels() == rule && check_block_diagonal(d, rep).empty();
        ok &= line(good, tag + " = " + labels);
      } catch (const Error& e) {
        ok &= line(false, tag + ": " + e.what());
      }
    }
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Run only these criteria (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "golden quotient matrices", criterion_1},
      {2, "golden R-matrices, QYBE and mutants", criterion_2},
      {3, "Casimir values", criterion_3},
      {4, "relation suites at cutoffs 4, 6, 8", criterion_4},
      {5, "deformed coupled bases", criterion_5},
      {6, "contraction squares", criterion_6},
      {7, "Hopf axioms and intertwiners", criterion_7},
      {8, "classical limits", criterion_8},
      {9, "decomposition of j x j' up to 3/2", criterion_9},
  };
  bool all_ok = true;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    out << "criterion " << c.id << " (" << c.title << ")\n";
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      out << "  error: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    out << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " [" << t.str() << " s]\n";
    all_ok &= ok;
  }
  return all_ok ? 0 : 1;
}
