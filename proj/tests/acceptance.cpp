// Acceptance suite: one check per criterion, each printed as a PASS/FAIL
// line with its runtime. The exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "rml/codefile.hpp"
#include "rml/report.hpp"
#include "rml/verify.hpp"

using namespace rml;
using verify_detail::render_wd;
using verify_detail::shape_tag;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s,
               const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0 && secs > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded the ") + std::to_string(time_limit_s) +
                  " s runtime limit";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

Mat mat_of(const Field& f, std::vector<std::vector<uint32_t>> rows) {
    Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.set_code(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return m;
}

std::vector<MatrixCode> grid_samples(const Field& f, int n, int m, int count, uint64_t salt) {
    std::mt19937_64 rng(0xace5u * 0x9e3779b97f4a7c15ULL + salt);
    return verify_detail::sample_matrix_codes(f, n, m, count, rng);
}

}  // namespace

int main() {
    const GridSpec grid;  // q in {2,3}, n,m <= 3, extensions up to degree 3

    criterion(1, "expansion of the rank-two line over GF(8) is bit-exact", 1.0, [&](std::string& detail) {
        Field f8 = Field::gf(8);
        Field f2 = Field::prime(2);
        FieldBasis gamma = FieldBasis::power_basis(f8);
        Mat g(f8, 1, 2);
        g.set_code(0, 0, 1);
        g.set_code(0, 1, 2);
        VectorCode c = VectorCode::from_generators(f8, 2, g);
        Mat img1 = VectorCode::expand_vector(gamma, {1, 2});
        Mat img2 = VectorCode::expand_vector(gamma, {2, 4});
        Mat img3 = VectorCode::expand_vector(gamma, {4, 3});  // a^2 * (1, a) = (a^2, a + 1)
        bool exact = img1 == mat_of(f2, {{1, 0, 0}, {0, 1, 0}}) && img2 == mat_of(f2, {{0, 1, 0}, {0, 0, 1}}) &&
                     img3 == mat_of(f2, {{0, 0, 1}, {1, 1, 0}});
        MatrixCode expected = MatrixCode::from_generators(f2, 2, 3, {img1, img2, img3});
        bool span_equal = c.expanded(gamma) == expected;
        detail = "generator images and canonical span both exact";
        return exact && span_equal;
    });

    criterion(2, "duality of the expansion matches the dual expansion in the orthogonal basis", 1.0,
              [&](std::string& detail) {
                  Field f8 = Field::gf(8);
                  Field f2 = Field::prime(2);
                  FieldBasis gamma = FieldBasis::power_basis(f8);
                  FieldBasis dual_basis = gamma.orthogonal();
                  if (!(dual_basis[0].code() == 1 && dual_basis[1].code() == 4 && dual_basis[2].code() == 2))
                      return false;  // {1, a^2, a}
                  Mat g(f8, 1, 2);
                  g.set_code(0, 0, 1);
                  g.set_code(0, 1, 2);
                  VectorCode c = VectorCode::from_generators(f8, 2, g);
                  if (c.dual().generator().row_codes(0) != std::vector<uint32_t>{1, 5}) return false;  // (1, a^2+1)
                  MatrixCode lhs = c.expanded(gamma).dual();
                  MatrixCode rhs = c.dual().expanded(dual_basis);
                  MatrixCode printed = MatrixCode::from_generators(
                      f2, 2, 3,
                      {mat_of(f2, {{0, 0, 1}, {1, 0, 0}}), mat_of(f2, {{1, 0, 1}, {0, 1, 0}}),
                       mat_of(f2, {{0, 1, 0}, {0, 0, 1}})});
                  detail = "printed span, computed dual and orthogonal-basis expansion all coincide";
                  return lhs == rhs && lhs == printed;
              });

    criterion(3, "duality transform equals enumeration on the sampled grid and the exhaustive 2x2 family", 60.0,
              [&](std::string& detail) {
                  long long tested = 0;
                  for (long long q : grid.qs)
                      for (int n = 1; n <= grid.nmax; ++n)
                          for (int m = 1; m <= grid.mmax; ++m) {
                              Field f = Field::prime(static_cast<uint32_t>(q));
                              for (const MatrixCode& c : grid_samples(f, n, m, 200, 300 + 100 * q + 10 * n + m)) {
                                  auto wd = c.weight_distribution();
                                  auto dual_wd = c.dual().weight_distribution();
                                  if (macwilliams_transform(wd, n, m, q, c.size()) != dual_wd) {
                                      detail = "mismatch at " + shape_tag(q, n, m);
                                      return false;
                                  }
                                  ++tested;
                              }
                          }
                  Field f2 = Field::prime(2);
                  for (const Subspace& s : enumerate_all_subspaces(f2, 4)) {
                      if (s.dim() > 2) continue;
                      MatrixCode c = MatrixCode::from_vectorized(2, 2, s);
                      if (macwilliams_transform(c.weight_distribution(), 2, 2, 2, c.size()) !=
                          c.dual().weight_distribution()) {
                          detail = "mismatch in the exhaustive 2x2 family";
                          return false;
                      }
                      ++tested;
                  }
                  detail = std::to_string(tested) + " codes, exact integer equality";
                  return true;
              });

    criterion(4, "extremal weight formula matches enumeration for every flagged code", 60.0,
              [&](std::string& detail) {
                  if (mrd_weight_distribution(2, 3, 2, 3, 2) != std::vector<long long>{1, 0, 7}) return false;
                  long long flagged = 0;
                  for (long long q : grid.qs)
                      for (int n = 1; n <= grid.nmax; ++n)
                          for (int m = 1; m <= grid.mmax; ++m) {
                              Field f = Field::prime(static_cast<uint32_t>(q));
                              int mn = std::min(n, m), mx = std::max(n, m);
                              for (const MatrixCode& c : grid_samples(f, n, m, 200, 400 + 100 * q + 10 * n + m)) {
                                  auto wd = c.weight_distribution();
                                  int d = verify_detail::dmin_of(wd);
                                  int d_dual = verify_detail::dmin_of(c.dual().weight_distribution());
                                  bool mrd = c.dim() == mx * (mn - d + 1);
                                  bool quasi = d + d_dual == mn + 1;
                                  if (!mrd && !quasi) continue;
                                  ++flagged;
                                  if (mrd_weight_distribution(n, m, q, c.dim(), d) != wd) {
                                      detail = "formula mismatch at " + shape_tag(q, n, m);
                                      return false;
                                  }
                              }
                          }
                  detail = std::to_string(flagged) + " extremal codes matched exactly";
                  return flagged > 0;
              });

    criterion(5, "worked generalized-weight values", 5.0, [&](std::string& detail) {
        MatrixCode sq = verify_detail::square_equal_columns_code();
        MatrixCode tall = verify_detail::tall_equal_columns_code();
        MatrixCode rows = verify_detail::tall_top_row_code();
        bool ok = generalized_weights(sq).at(2) == 1 && generalized_matrix_weights(sq).at(2) == 2 &&
                  generalized_matrix_weights(sq.transposed()).at(2) == 1 && generalized_weights(tall).at(3) == 1 &&
                  generalized_matrix_weights(tall).at(3) == 3 &&
                  generalized_weights(rows) == WeightProfile({1, 2}) && generalized_matrix_weights(rows).at(2) == 1;
        detail = "square pair, tall equal-columns and top-row codes all exact";
        return ok;
    });

    criterion(6, "vector weight definitions agree and the expansion bridge holds exactly where stated", 120.0,
              [&](std::string& detail) {
                  Field f4 = Field::gf(4);
                  Field f8 = Field::gf(8);
                  long long tested = 0;
                  auto agree = [&](const VectorCode& c) {
                      auto w = generalized_vector_weights(c, VectorWeightDefinition::subcode_support);
                      if (generalized_vector_weights(c, VectorWeightDefinition::closure_max_support) != w)
                          return false;
                      if (c.n() <= c.field().degree() &&
                          generalized_vector_weights(c, VectorWeightDefinition::max_support) != w)
                          return false;
                      if (c.dim() <= c.field().degree() &&
                          generalized_vector_weights(c, VectorWeightDefinition::anticode_intersection) != w)
                          return false;
                      if (c.n() <= c.field().degree()) {
                          WeightProfile d = generalized_weights(c.expanded(FieldBasis::power_basis(c.field())));
                          for (int i = 1; i <= c.dim(); ++i)
                              for (int e = 0; e <= c.field().degree() - 1; ++e)
                                  if (w.at(i) != d.at(c.field().degree() * i - e)) return false;
                      }
                      ++tested;
                      return true;
                  };
                  for (int k : {1, 2})
                      for (const Subspace& s : enumerate_subspaces(f4, 2, k))
                          if (!agree(VectorCode::from_subspace(f4, s))) {
                              detail = "disagreement over GF(4)^2";
                              return false;
                          }
                  std::mt19937_64 rng(0xace5);
                  for (int t = 0; t < 12; ++t) {
                      VectorCode c =
                          VectorCode::from_subspace(f8, random_subspace(f8, 2, 1 + static_cast<int>(rng() % 2), rng));
                      if (!agree(c)) {
                          detail = "disagreement over GF(8)^2";
                          return false;
                      }
                  }
                  // the long-ambient witness: the bridge genuinely fails for n > m
                  VectorCode c = verify_detail::gf4_span_e1_len3();
                  WeightProfile w = generalized_vector_weights(c, VectorWeightDefinition::subcode_support);
                  WeightProfile dp = generalized_weights(c.expanded(FieldBasis::power_basis(f4)));
                  if (!(w.at(1) == 1 && dp.at(2) == 2)) return false;
                  detail = std::to_string(tested) + " codes cross-checked; witness w_1=1 vs d_2=2 reproduced";
                  return true;
              });

    criterion(7, "bound trichotomy with equality characterizations on the full grid", 120.0,
              [&](std::string& detail) {
                  long long tested = 0;
                  for (long long q : grid.qs)
                      for (int n = 1; n <= grid.nmax; ++n)
                          for (int m = 1; m <= grid.mmax; ++m) {
                              Field f = Field::prime(static_cast<uint32_t>(q));
                              int mn = std::min(n, m), mx = std::max(n, m);
                              for (const MatrixCode& c : grid_samples(f, n, m, 200, 700 + 100 * q + 10 * n + m)) {
                                  verify_detail::CodeStats s = verify_detail::stats_of(c, kDefaultBudget);
                                  bool mrd = c.dim() == mx * (mn - s.d + 1);
                                  bool anti = c.dim() == mx * s.maxrk;
                                  bool zero_or_full = c.dim() == 0 || c.dim() == n * m;
                                  bool ok = c.dim() <= mx * (mn - s.d + 1) && c.dim() <= mx * s.maxrk &&
                                            s.d + s.d_dual <= mn + 2 && ((s.d + s.d_dual == mn + 2) == mrd) &&
                                            s.maxrk + s.maxrk_dual >= mn && ((s.maxrk + s.maxrk_dual == mn) == anti) &&
                                            s.d <= s.maxrk_dual + 1 && ((s.d == s.maxrk_dual + 1) == (mrd && anti)) &&
                                            ((mrd && anti) == zero_or_full);
                                  if (!ok) {
                                      detail = "violation at " + shape_tag(q, n, m) + " wd=" + render_wd(s.wd);
                                      return false;
                                  }
                                  ++tested;
                              }
                          }
                  detail = std::to_string(tested) + " sampled codes, all bounds and equality cases exact";
                  return true;
              });

    criterion(8, "q-polymatroid axioms, duality, recovery and the rank-table enumerator", 120.0,
              [&](std::string& detail) {
                  long long tested = 0;
                  for (long long q : grid.qs)
                      for (int n = 1; n <= grid.nmax; ++n)
                          for (int m = 1; m <= grid.mmax; ++m) {
                              Field f = Field::prime(static_cast<uint32_t>(q));
                              for (const MatrixCode& c : grid_samples(f, n, m, 20, 800 + 100 * q + 10 * n + m)) {
                                  CodePolymatroid cp = CodePolymatroid::of(c);  // axioms verified exhaustively
                                  if (cp.primary.dual().dual() != cp.primary) {
                                      detail = "dual involution failed";
                                      return false;
                                  }
                                  if (cp.primary.dual() != CodePolymatroid::of(c.dual()).primary) {
                                      detail = "dual table differs from the dual code's table";
                                      return false;
                                  }
                                  auto rec = cp.recover();
                                  if (rec.dim != c.dim() || rec.d_min != c.min_distance() ||
                                      rec.weights != generalized_weights(c).values()) {
                                      detail = "recovery mismatch at " + shape_tag(q, n, m);
                                      return false;
                                  }
                                  if (n <= m) {
                                      auto we = weight_enumerator(cp.primary, n, m);
                                      if (we.distribution != c.weight_distribution()) {
                                          detail = "enumerator mismatch at " + shape_tag(q, n, m);
                                          return false;
                                      }
                                  }
                                  ++tested;
                              }
                          }
                  detail = std::to_string(tested) + " code tables verified end to end";
                  return true;
              });

    criterion(9, "classification: 2x2 optimal anticodes reduce to standard; GF(4)^3 vector anticodes of dim <= 2 "
                 "reduce to coordinate spans", 60.0,
              [&](std::string& detail) {
                  Field f2 = Field::prime(2);
                  int anticodes = 0;
                  std::vector<MatrixCode> shortenings;
                  for (const Subspace& v : enumerate_all_subspaces(f2, 2)) {
                      shortenings.push_back(MatrixCode::full(f2, 2, 2).shortened(v));
                      shortenings.push_back(shortenings.back().transposed());
                  }
                  for (const Subspace& s : enumerate_all_subspaces(f2, 4)) {
                      MatrixCode c = MatrixCode::from_vectorized(2, 2, s);
                      int maxrk = c.max_rank();
                      if (c.dim() != 2 * maxrk) continue;
                      ++anticodes;
                      bool is_shortening = std::any_of(shortenings.begin(), shortenings.end(),
                                                       [&](const MatrixCode& x) { return x == c; });
                      if (!is_shortening || !are_equivalent(c, MatrixCode::standard_anticode(f2, 2, 2, maxrk))) {
                          detail = "matrix half failed";
                          return false;
                      }
                  }
                  // vector half, stated for every code attaining the anticode
                  // equality with dim <= 2
                  Field f4 = Field::gf(4);
                  int vector_anticodes = 0, reduced = 0;
                  std::string witness;
                  for (int k : {1, 2}) {
                      VectorCode standard = VectorCode::from_subspace(f4, Subspace::from_rows([&] {
                                                                          Mat m(f4, k, 3);
                                                                          for (int i = 0; i < k; ++i)
                                                                              m.set_code(i, i, 1);
                                                                          return m;
                                                                      }()));
                      for (const Subspace& s : enumerate_subspaces(f4, 3, k)) {
                          VectorCode c = VectorCode::from_subspace(f4, s);
                          if (!c.classify().is_optimal_vector_anticode) continue;
                          ++vector_anticodes;
                          if (are_equivalent(c, standard))
                              ++reduced;
                          else if (witness.empty()) {
                              witness = "first counterexample generator rows:";
                              for (int r = 0; r < c.generator().rows(); ++r) {
                                  witness += " (";
                                  for (int j = 0; j < 3; ++j)
                                      witness += (j ? "," : "") + std::to_string(c.generator().code_at(r, j));
                                  witness += ")";
                              }
                          }
                      }
                  }
                  detail = std::to_string(anticodes) + " matrix anticodes reduced; vector half: " +
                           std::to_string(reduced) + " of " + std::to_string(vector_anticodes) +
                           " anticode-equality codes reduce" + (witness.empty() ? "" : "; " + witness) +
                           " -- every code of dimension 2 (the extension degree) attains the anticode equality, "
                           "but only the Frobenius-fixed ones reduce, so the unrestricted claim fails at this "
                           "boundary";
                  return reduced == vector_anticodes;
              });

    criterion(10, "no isometry of the 2x3 matrices extends the left-block transpose map", 5.0,
              [&](std::string& detail) {
                  MatrixCode c = verify_detail::left_block_code_2x3();
                  std::vector<Mat> images;
                  for (int t = 0; t < c.dim(); ++t) {
                      Mat b = c.basis_matrix(t);
                      Mat img(c.field(), 2, 3);
                      for (int i = 0; i < 2; ++i)
                          for (int j = 0; j < 2; ++j) img.set_code(i, j, b.code_at(j, i));
                      images.push_back(std::move(img));
                  }
                  long long searched = gl_order(2, 2) * gl_order(2, 3);
                  bool none = !extension_exists(c, images).has_value();
                  detail = "searched all " + std::to_string(searched) +
                           " isometries (no transpose family since n != m); no extension";
                  return none && searched == 1008;
              });

    criterion(11, "formula-reading regressions are documented and pinned", 10.0, [&](std::string& detail) {
        // (a) the duality-kernel exponent must bind the inner summation index
        // and the moment identity must read the dual distribution under the
        // summation index; both alternatives fail on the exhaustive 2x2 family
        Field f2 = Field::prime(2);
        bool exponent_variant_fails = false, moment_variant_fails = false, canonical_ok = true;
        for (const Subspace& s : enumerate_all_subspaces(f2, 4)) {
            MatrixCode c = MatrixCode::from_vectorized(2, 2, s);
            auto wd = c.weight_distribution();
            auto dual_wd = c.dual().weight_distribution();
            if (macwilliams_transform(wd, 2, 2, 2, c.size()) != dual_wd) canonical_ok = false;
            try {
                if (detail::macwilliams_transform_impl(wd, 2, 2, 2, c.size(),
                                                       detail::DualityExponentBinding::outer_index) != dual_wd)
                    exponent_variant_fails = true;
            } catch (const std::exception&) {
                exponent_variant_fails = true;
            }
            if (!detail::macwilliams_moment_failures_impl(wd, dual_wd, 2, 2, 2, c.size(),
                                                          detail::MomentIndexBinding::moment_index)
                     .empty())
                moment_variant_fails = true;
        }
        // (b) the transpose-side rank value at the self-orthogonal line of the
        // square worked example: direct evaluation gives 0; a dimension-valued
        // reading is inconsistent with the shortening definition, while the
        // non-equivalence verdict of the pair is unaffected
        CodePolymatroid cp = CodePolymatroid::of(verify_detail::square_equal_columns_code());
        Subspace line = Subspace::from_rows(mat_of(f2, {{1, 1}}));
        bool regression = cp.transpose_side->rho(line) == Rat(0) && cp.primary.rho(line) == Rat(1, 2) &&
                          !are_equivalent(cp.primary, *cp.transpose_side).has_value();
        detail = std::string("canonical readings pass everywhere; exponent variant fails: ") +
                 (exponent_variant_fails ? "yes" : "no") + "; moment-index variant fails: " +
                 (moment_variant_fails ? "yes" : "no") +
                 "; transpose-side rho(<(1,1)>) = 0 (dimension-valued reading excluded), pair non-equivalence "
                 "verified";
        return canonical_ok && exponent_variant_fails && moment_variant_fails && regression;
    });

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    if (failures > 0)
        std::printf("note: failures above carry their counterexample payloads; see the suite detail lines\n");
    return failures;
}
