#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ssf/exceptional.hpp"
#include "ssf/idempotents.hpp"
#include "ssf/two_gen.hpp"

namespace ssf::io {

using json = nlohmann::ordered_json;

// Scalars are "p/q" strings over Q and residues over F_p.
inline json to_json(const Rational& x) { return x.to_string(); }
inline json to_json(const ModP& x) { return x.residue(); }

template <class S>
S scalar_from_json(const Field<S>& f, const json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f(j.get<long>());
  fail(ErrorCode::ParseError, "expected a scalar (string or integer), got " + j.dump());
}

template <class Derived>
json to_json(const Eigen::MatrixBase<Derived>& m) {
  json out = json::array();
  if constexpr (Derived::ColsAtCompileTime == 1) {
    for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(m(i, 0)));
    return out;
  }
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class S>
json to_json(const std::vector<Vector<S>>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

template <class S>
Matrix<S> matrix_from_json(const Field<S>& f, const json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::ParseError, "expected a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array()) fail(ErrorCode::ParseError, "expected rows to be arrays");
  const Index cols = static_cast<Index>(j[0].size());
  Matrix<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) fail(ErrorCode::ParseError, "ragged matrix");
    for (Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json(f, row[static_cast<std::size_t>(c)]);
  }
  return m;
}

template <class S>
Vector<S> vector_from_json(const Field<S>& f, const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array");
  Vector<S> v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = scalar_from_json(f, j[i]);
  return v;
}

inline json to_json(const FieldDescriptor& d) {
  if (d.kind() == FieldDescriptor::Kind::Rational) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", d.p()}};
}

inline FieldDescriptor field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) fail(ErrorCode::ConfigError, "field must be an object with a kind");
  for (const auto& [key, _] : j.items())
    if (key != "kind" && key != "p") fail(ErrorCode::ConfigError, "unknown field key '" + key + "'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "rational") {
    if (j.contains("p")) fail(ErrorCode::ConfigError, "rational field takes no p");
    return FieldDescriptor::rational();
  }
  if (kind == "prime") {
    if (!j.contains("p") || !j.at("p").is_number_unsigned())
      fail(ErrorCode::ConfigError, "prime field needs a positive integer p");
    return FieldDescriptor::prime(j.at("p").get<std::uint64_t>());
  }
  fail(ErrorCode::ConfigError, "field kind must be 'rational' or 'prime'");
}

/// Algebra as labels, field, meta and the nonzero structure constants
/// [i, j, k, c] with i <= j, meaning b_i b_j has coefficient c on b_k.
template <class S>
json to_json(const Algebra<S>& alg) {
  json out;
  out["field"] = to_json(alg.field().descriptor());
  out["kind"] = std::string(to_string(alg.kind()));
  out["dim"] = alg.dim();
  out["labels"] = alg.labels();
  if (alg.meta().alpha) out["alpha"] = to_json(*alg.meta().alpha);
  if (alg.meta().space) out["gram"] = to_json(alg.meta().space->gram());
  json constants = json::array();
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = i; j < alg.dim(); ++j)
      for (Index k = 0; k < alg.dim(); ++k)
        if (!is_zero(alg.constant(i, j, k))) constants.push_back(json::array({i, j, k, to_json(alg.constant(i, j, k))}));
  out["structure_constants"] = std::move(constants);
  out["jordan_special"] = alg.meta().jordan_special;
  out["warnings"] = alg.meta().warnings;
  return out;
}

/// Inverse of to_json(Algebra). Split spin and cover documents are rebuilt
/// from alpha and gram and must reproduce the listed constants.
template <class S>
Algebra<S> algebra_from_json(const Field<S>& f, const json& j) {
  if (field_from_json(j.at("field")) != f.descriptor()) fail(ErrorCode::FieldMismatch, "document is over another field");
  const auto labels = j.at("labels").get<std::vector<std::string>>();
  const Index n = static_cast<Index>(labels.size());
  std::vector<Matrix<S>> mult(static_cast<std::size_t>(n), zeros(f, n, n));
  for (const auto& t : j.at("structure_constants")) {
    const Index a = t.at(0).get<Index>(), b = t.at(1).get<Index>(), c = t.at(2).get<Index>();
    if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n) fail(ErrorCode::ParseError, "structure constant index out of range");
    const S value = scalar_from_json(f, t.at(3));
    mult[static_cast<std::size_t>(a)](c, b) = value;
    mult[static_cast<std::size_t>(b)](c, a) = value;
  }
  Algebra<S> plain(f, labels, std::move(mult));
  const auto kind = j.value("kind", std::string("derived"));
  if (kind == "split_spin" || kind == "cover") {
    const QuadraticSpace<S> q(f, matrix_from_json(f, j.at("gram")));
    Algebra<S> rebuilt = kind == "cover" ? build_exceptional(q) : build_split_spin(q, scalar_from_json(f, j.at("alpha")));
    if (!same_structure(rebuilt, plain)) fail(ErrorCode::ParseError, "structure constants disagree with alpha and gram");
    return rebuilt;
  }
  if (kind == "matsuo_3c") {
    Algebra<S> rebuilt = matsuo_3c(f, scalar_from_json(f, j.at("alpha")));
    if (!same_structure(rebuilt, plain)) fail(ErrorCode::ParseError, "structure constants disagree with alpha");
    return rebuilt;
  }
  return plain;
}

template <class S>
json to_json(const FusionLaw<S>& law) {
  json out;
  out["kind"] = law.kind == LawKind::Jordan ? "jordan" : "monster";
  json ev = json::object();
  for (std::size_t i = 0; i < law.size(); ++i) ev[law.names[i]] = to_json(law.eigenvalues[i]);
  out["eigenvalues"] = std::move(ev);
  return out;
}

template <class S>
json to_json(const AxisReport<S>& r) {
  json out;
  out["law"] = to_json(r.law);
  json dims = json::object();
  for (std::size_t i = 0; i < r.dims.size(); ++i) dims[r.law.names[i]] = r.dims[i];
  out["eigenspace_dims"] = std::move(dims);
  out["primitive"] = r.primitive;
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"lhs", r.law.names[v.lhs]}, {"rhs", r.law.names[v.rhs]}, {"found", r.law.names[v.component]}});
  out["violations"] = std::move(violations);
  out["miyamoto"] = to_json(r.miyamoto);
  out["passes"] = r.passes();
  return out;
}

template <class S>
json to_json(const IdempotentClass<S>& c) {
  json out;
  out["tag"] = std::string(to_string(c.tag));
  out["element"] = to_json(c.element);
  if (c.e) out["e"] = to_json(*c.e);
  return out;
}

template <class S>
json to_json(const FrobeniusForm<S>& form) {
  return json{{"gram", to_json(form.gram)}, {"radical", to_json(form.radical)}, {"associative", form.associative}};
}

template <class S>
json to_json(const AlgebraRadical<S>& r) {
  return json{{"kind", std::string(to_string(r.kind))}, {"basis", to_json(r.basis)}, {"is_ideal", r.is_ideal}};
}

inline json to_json(const SimplicityVerdict& v) {
  return json{{"simple", v.simple}, {"reason", std::string(to_string(v.reason))}};
}

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exhaustive: return "exhaustive";
    case SearchStatus::Sampled: return "sampled";
    case SearchStatus::Unknown: return "unknown";
  }
  return "unknown";
}

template <class S>
json to_json(const NormOneSearch<S>& s) {
  return json{{"status", std::string(to_string(s.status))}, {"count", s.vectors.size()}, {"spans", s.spans}};
}

inline json to_json(const OrderResult& r) {
  if (r.kind == OrderKind::Finite) return r.n;
  return r.kind == OrderKind::InfiniteCertified ? "infinite" : "exceeds_cap";
}

template <class S>
json to_json(const YabeData<S>& y) {
  json out;
  out["a0"] = to_json(y.a0);
  out["a1"] = to_json(y.a1);
  out["a_minus1"] = to_json(y.a_minus1);
  out["q"] = to_json(y.q);
  out["delta"] = to_json(y.delta);
  out["spans_algebra"] = y.spans_algebra;
  out["a_minus1_formula_ok"] = y.a_minus1_formula_ok;
  if (y.yabe_algebra) out["structure_constants_in_yabe_basis"] = to_json(*y.yabe_algebra);
  return out;
}

template <class S>
json to_json(const AxetResult<S>& a) {
  json out;
  if (a.size_kind == OrderKind::Finite) out["size"] = a.size;
  else out["size"] = a.size_kind == OrderKind::InfiniteCertified ? "infinite" : "exceeds_cap";
  if (a.split) out["split"] = std::string(to_string(*a.split));
  if (a.d_hat_index) out["index"] = *a.d_hat_index;
  if (a.d_order) out["d_order"] = *a.d_order;
  out["rho_order"] = to_json(a.rho);
  out["cap_exceeded"] = a.cap_exceeded;
  if (a.size_kind == OrderKind::Finite) {
    out["consistent"] = a.consistent;
    out["orbit"] = to_json(a.orbit);
  }
  return out;
}

template <class S>
json to_json(const CoverReport<S>& r) {
  json out;
  out["nil_ideal_ok"] = r.nil_ideal_ok;
  out["no_identity"] = r.no_identity;
  out["quotient_iso_ok"] = r.quotient_iso_ok;
  out["fusion_ok"] = r.fusion_ok;
  out["three_c_ok"] = r.three_c_ok;
  out["frobenius_associative"] = r.frobenius_associative;
  out["radical_ok"] = r.radical_ok;
  out["radical_basis"] = to_json(r.radical_basis);
  out["family_samples"] = r.family_samples;
  json axes = json::object();
  for (const auto& [label, report] : r.axis_reports) axes[label] = to_json(report);
  out["axis_reports"] = std::move(axes);
  out["ok"] = r.ok();
  return out;
}

}  // namespace ssf::io
