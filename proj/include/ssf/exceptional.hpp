#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssf/axial.hpp"

namespace ssf {

template <class S>
struct CoverReport {
  bool nil_ideal_ok = false;    // n A = 0
  bool no_identity = false;
  bool quotient_iso_ok = false;  // A/<n> onto E + F z1 inside S(b,-1)
  std::vector<std::pair<std::string, AxisReport<S>>> axis_reports;
  bool fusion_ok = false;          // z1 under jordan(-1), family under monster(-1,1/2)
  bool three_c_ok = false;         // B_x embeds as 3C(-1) for every sampled family axis
  bool frobenius_associative = false;
  bool radical_ok = false;         // algebra radical = E^perp + <n> = Frobenius radical, an ideal
  std::vector<Vector<S>> radical_basis;
  std::size_t family_samples = 0;  // norm-one vectors used for family checks

  bool ok() const {
    return nil_ideal_ok && no_identity && quotient_iso_ok && fusion_ok && three_c_ok && frobenius_associative &&
           radical_ok;
  }
};

inline constexpr std::size_t kCoverFamilySamples = 4;

/// Full check of the cover: nil ideal, quotient, fusion laws, 3C(-1)
/// subalgebras, Frobenius form and radical. Family checks use up to
/// `samples` norm-one vectors found by find_norm_one.
template <class S>
CoverReport<S> verify_cover(const QuadraticSpace<S>& q, std::size_t samples = kCoverFamilySamples,
                            std::uint64_t budget = kDefaultNormOneBudget, std::uint64_t seed = 1) {
  const Field<S>& f = q.field();
  if (f.characteristic() == 2 || f.characteristic() == 3)
    fail(ErrorCode::BadCharacteristic, "the exceptional cover needs characteristic not 2 or 3");
  const Algebra<S> alg = build_exceptional(q);
  const Index k = q.dim();
  CoverReport<S> report;

  const Vector<S> n = alg.basis(alg.n());
  report.nil_ideal_ok = true;
  for (Index i = 0; i < alg.dim(); ++i)
    if (!is_zero(multiply(alg, n, alg.basis(i)))) report.nil_ideal_ok = false;
  report.no_identity = !identity_of(alg).has_value();

  // A/<n> keeps e_1..e_k, z1; S(b,-1) restricted to e_1..e_k, z1 is a
  // subalgebra on the same labels. The map is the identity on coordinates.
  const Quotient<S> quo = quotient(alg, {n});
  const Algebra<S> target = build_split_spin(q, -f.one());
  std::vector<Vector<S>> gens;
  for (Index i = 0; i < k; ++i) gens.push_back(target.basis(i));
  gens.push_back(target.basis(target.z1()));
  const Subalgebra<S> sub = subalgebra(target, gens);
  if (sub.algebra.dim() == k + 1 && quo.algebra.dim() == k + 1)
    report.quotient_iso_ok = is_isomorphism(quo.algebra, sub.algebra, identity(f, k + 1)).ok;

  report.fusion_ok = true;
  {
    auto z1 = check_axis(alg, alg.basis(alg.z1()), jordan_law(f, -f.one()));
    report.fusion_ok = report.fusion_ok && z1.passes();
    report.axis_reports.emplace_back("z1", std::move(z1));
  }
  const auto search = find_norm_one(q, budget, seed, samples);
  report.three_c_ok = true;
  for (const auto& e : search.vectors) {
    if (report.family_samples == samples) break;
    ++report.family_samples;
    auto r = check_axis(alg, family_axis(alg, e, Family::Exceptional), family_law(alg, Family::Exceptional));
    report.fusion_ok = report.fusion_ok && r.passes();
    std::string label = "x(";
    for (Index i = 0; i < k; ++i) label += (i ? "," : "") + e(i).to_string();
    report.axis_reports.emplace_back(label + ")", std::move(r));
    report.three_c_ok = report.three_c_ok && b_x_is_3c(alg, e).ok;
  }

  const FrobeniusForm<S> form = frobenius(alg);
  report.frobenius_associative = form.associative;
  const AlgebraRadical<S> rad = algebra_radical(alg);
  report.radical_basis = rad.basis;
  std::vector<Vector<S>> expected;
  for (const auto& v : form_radical_space(q)) expected.push_back(lift(alg, v));
  expected.push_back(n);
  report.radical_ok = rad.is_ideal && same_span(rad.basis, expected, alg.dim()) &&
                      same_span(rad.basis, form.radical, alg.dim());
  return report;
}

/// Whether m is an automorphism of the cover. When b != 0 and m preserves E,
/// it must also fix z1 and n; a multiplicative m that does not is reported
/// as an internal error.
template <class S>
bool cover_aut_membership(const QuadraticSpace<S>& q, const Matrix<S>& m) {
  const Algebra<S> alg = build_exceptional(q);
  if (m.rows() != alg.dim() || m.cols() != alg.dim()) return false;
  if (!is_automorphism(alg, m)) return false;
  const Index k = q.dim();
  const bool preserves_e = is_zero(m.bottomLeftCorner(2, k));
  if (!is_zero(q.gram()) && preserves_e) {
    if (Vector<S>(m.col(alg.z1())) != alg.basis(alg.z1()) || Vector<S>(m.col(alg.n())) != alg.basis(alg.n()))
      fail(ErrorCode::InternalError, "automorphism preserving E moves z1 or n while b != 0");
  }
  return true;
}

}  // namespace ssf
