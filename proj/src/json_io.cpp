#include "homlie/json_io.hpp"

#include "homlie/errors.hpp"

namespace homlie {

Json to_json(const Scalar& s) { return to_string(s); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const Check& c) {
  Json out = {{"name", c.name}, {"status", std::string(to_string(c.status))}};
  if (!c.witness.empty()) out["witness"] = c.witness;
  if (c.residual) out["residual"] = to_json(*c.residual);
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks()) out.push_back(to_json(c));
  return out;
}

Json to_json(const StructureConstants& c) {
  Json out = Json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.dim(); ++j) row.push_back(to_json(c.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const WeightSpace& w) { return {{"functional", to_json(w.functional)}, {"space", to_json(w.space)}}; }

Json to_json(const WindowedModule& m) {
  auto entry = [&](const ActionTable& t, std::size_t k) {
    return Json{{"target", m.lo + static_cast<long>(k) + t.shift}, {"coeff", to_json(t.coeff[k])}};
  };
  Json table = Json::array();
  for (std::size_t k = 0; k < m.size(); ++k)
    table.push_back({{"index", m.lo + static_cast<long>(k)},
                     {"e", entry(m.e, k)},
                     {"f", entry(m.f, k)},
                     {"h", entry(m.h, k)},
                     {"beta", to_json(m.beta[k])}});
  return {{"kind", to_string(m.params.kind)},
          {"params",
           {{"n", m.params.n},
            {"tau", m.params.tau},
            {"mu", m.params.mu},
            {"b0", to_json(m.params.b0)},
            {"lambda", to_json(m.params.lambda)}}},
          {"window", {m.lo, m.hi}},
          {"twist", to_json(m.twist)},
          {"convention", m.convention},
          {"table", table}};
}

Json to_json(const GeneralAnsatz& a) {
  Json table = Json::array();
  for (long i = a.lo - 1; i <= a.hi + 1; ++i)
    table.push_back({{"index", i},
                     {"eta", to_json(a.at(a.eta, i))},
                     {"nu", to_json(a.at(a.nu, i))},
                     {"gamma", to_json(a.at(a.gamma, i))},
                     {"mu", to_json(a.at(a.mu, i))},
                     {"gamma_mu_next", to_json(a.at(a.product, i))}});
  return {{"lambda", to_json(a.lambda)},
          {"eta0", to_json(a.eta0)},
          {"nu0", to_json(a.nu0)},
          {"mu1", to_json(a.mu1)},
          {"gamma0", to_json(a.gamma0)},
          {"window", {a.lo, a.hi}},
          {"free_mu", a.free_mu},
          {"table", table}};
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::ParseError, "scalar must be a JSON string");
  return parse_scalar(j.get<std::string>());
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    fail(ErrorKind::ParseError, "matrix must be a nonempty array of rows");
  const std::size_t cols = j.front().size();
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail(ErrorKind::ParseError, "matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

}  // namespace homlie
