#include "diored/serialize.hpp"

#include <algorithm>

#include "diored/rational.hpp"

namespace diored {

namespace {

Json basis_exprs(const GroebnerBasis& basis) {
  Json out = Json::array();
  for (const auto& g : basis.generators) out.push_back(render_poly(g));
  return out;
}

GroebnerBasis basis_from_exprs(const Json& exprs, const VarRegistry& registry, OrderKind order,
                               std::vector<Polynomial> source) {
  GroebnerBasis basis{{}, TermOrder(order, registry), std::move(source)};
  for (const auto& e : exprs)
    basis.generators.push_back(parse_poly(e.get<std::string>(), registry));
  return basis;
}

Json vec_to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (long long c : v) out.push_back(c);
  return out;
}

LatticeVector vec_from_json(const Json& j) {
  LatticeVector v;
  for (const auto& c : j) v.push_back(c.get<long long>());
  return v;
}

}  // namespace

Json poly_to_json(const Polynomial& p) {
  Json out;
  out["vars"] = p.registry().names();
  out["expr"] = render_poly(p);
  return out;
}

Polynomial poly_from_json(const Json& j) {
  VarRegistry registry(j.at("vars").get<std::vector<std::string>>());
  return parse_poly(j.at("expr").get<std::string>(), registry);
}

Json curve_to_json(const Curve& E) {
  Json out;
  out["label"] = E.label();
  out["a1"] = rational_to_string(E.a1());
  out["a2"] = rational_to_string(E.a2());
  out["a3"] = rational_to_string(E.a3());
  out["a4"] = rational_to_string(E.a4());
  out["a6"] = rational_to_string(E.a6());
  return out;
}

Curve curve_from_json(const Json& j) {
  return Curve(rational_from_string(j.at("a1").get<std::string>()),
               rational_from_string(j.at("a2").get<std::string>()),
               rational_from_string(j.at("a3").get<std::string>()),
               rational_from_string(j.at("a4").get<std::string>()),
               rational_from_string(j.at("a6").get<std::string>()),
               j.at("label").get<std::string>());
}

Json point_to_json(const ECPoint& p) {
  if (p.is_infinity()) return Json("inf");
  Json out;
  out["x"] = rational_to_string(p.x());
  out["y"] = rational_to_string(p.y());
  return out;
}

ECPoint point_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf")
      fail(ErrorKind::ParseError, "expected \"inf\" or coordinate object for a curve point");
    return ECPoint::infinity();
  }
  return ECPoint::affine(rational_from_string(j.at("x").get<std::string>()),
                         rational_from_string(j.at("y").get<std::string>()));
}

Json basis_to_json(const GroebnerBasis& basis) {
  Json out;
  out["order"] = to_string(basis.order.kind());
  out["vars"] = basis.order.registry().names();
  out["basis"] = basis_exprs(basis);
  return out;
}

Json smoothing_to_json(const SmoothingResult& result) {
  Json out;
  out["c"] = result.c;
  out["f"] = poly_to_json(result.f);
  out["F"] = poly_to_json(result.F);
  out["fresh_var"] = result.fresh_var;
  out["degree_in"] = result.degree_in;
  out["degree_out"] = result.degree_out;
  out["certificate"] = basis_exprs(result.certificate);
  Json rejected = Json::array();
  for (const auto& [c, basis] : result.rejected) {
    Json entry;
    entry["c"] = c;
    entry["basis"] = basis_exprs(basis);
    rejected.push_back(std::move(entry));
  }
  out["rejected"] = std::move(rejected);
  return out;
}

namespace {

SmoothingResult smoothing_from_json(const Json& j, OrderKind order) {
  Polynomial f = poly_from_json(j.at("f"));
  Polynomial F = poly_from_json(j.at("F"));
  const VarRegistry& ext = F.registry();
  SmoothingResult result{
      j.at("c").get<int>(),
      std::move(f),
      F,
      j.at("fresh_var").get<std::string>(),
      basis_from_exprs(j.at("certificate"), ext, order, jacobian_generators(F)),
      {},
      j.at("degree_in").get<int>(),
      j.at("degree_out").get<int>(),
  };
  for (const auto& entry : j.at("rejected")) {
    const int c = entry.at("c").get<int>();
    Polynomial candidate = build_candidate(result.f, c);
    result.rejected.emplace_back(
        c, basis_from_exprs(entry.at("basis"), ext, order, jacobian_generators(candidate)));
  }
  return result;
}

}  // namespace

Json instance_to_json(const InstanceDescriptor& desc) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "instance";
  out["n"] = desc.n;
  out["mode"] = to_string(desc.mode);
  out["curve"] = curve_to_json(desc.curve);
  out["P"] = point_to_json(desc.P);
  Json s = Json::array();
  for (const auto& p : desc.S.points) s.push_back(vec_to_json(p));
  out["S"] = std::move(s);
  Json sp = Json::array();
  for (const auto& tuple : desc.S_prime) {
    Json row = Json::array();
    for (const auto& pt : tuple) row.push_back(point_to_json(pt));
    sp.push_back(std::move(row));
  }
  out["S_prime"] = std::move(sp);
  out["base_point_x"] = vec_to_json(desc.base_point_x);
  out["Z_equation"] = poly_to_json(desc.Z_equation);
  out["smoothing"] = smoothing_to_json(desc.smoothing);
  Json prov;
  prov["input_f"] = poly_to_json(desc.provenance.input_f);
  prov["mode"] = to_string(desc.provenance.mode);
  if (desc.provenance.four_squares_f) {
    prov["four_squares"] = poly_to_json(*desc.provenance.four_squares_f);
    Json vars = Json::array();
    for (const auto& entry : desc.provenance.four_squares_vars) {
      Json row;
      row["original"] = entry.original;
      row["fresh"] = entry.fresh;
      vars.push_back(std::move(row));
    }
    prov["four_squares_vars"] = std::move(vars);
  } else {
    prov["four_squares"] = nullptr;
    prov["four_squares_vars"] = nullptr;
  }
  prov["homogenization_var"] = desc.provenance.homogenization_var;
  prov["c_max"] = desc.provenance.c_max;
  prov["order"] = to_string(desc.provenance.order);
  out["provenance"] = std::move(prov);
  return out;
}

InstanceDescriptor instance_from_json(const Json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
    fail(ErrorKind::ParseError, "unsupported or missing schema_version");
  if (j.at("kind").get<std::string>() != "instance")
    fail(ErrorKind::ParseError, "expected kind \"instance\"");

  const Json& prov_j = j.at("provenance");
  const OrderKind order = order_kind_from_string(prov_j.at("order").get<std::string>());

  Provenance prov{
      poly_from_json(prov_j.at("input_f")),
      mode_from_string(prov_j.at("mode").get<std::string>()),
      {},
      {},
      prov_j.at("homogenization_var").get<std::string>(),
      prov_j.at("c_max").get<int>(),
      order,
  };
  if (!prov_j.at("four_squares").is_null()) {
    prov.four_squares_f = poly_from_json(prov_j.at("four_squares"));
    for (const auto& row : prov_j.at("four_squares_vars")) {
      FourSquaresMap entry;
      entry.original = row.at("original").get<std::string>();
      auto fresh = row.at("fresh").get<std::vector<std::string>>();
      if (fresh.size() != 4) fail(ErrorKind::ParseError, "four_squares_vars entry needs 4 names");
      std::copy(fresh.begin(), fresh.end(), entry.fresh.begin());
      prov.four_squares_vars.push_back(std::move(entry));
    }
  }

  LatticeSet S;
  S.n = j.at("n").get<int>();
  for (const auto& row : j.at("S")) S.points.push_back(vec_from_json(row));

  InstanceDescriptor desc{
      j.at("n").get<int>(),
      curve_from_json(j.at("curve")),
      point_from_json(j.at("P")),
      std::move(S),
      {},
      vec_from_json(j.at("base_point_x")),
      poly_from_json(j.at("Z_equation")),
      smoothing_from_json(j.at("smoothing"), order),
      mode_from_string(j.at("mode").get<std::string>()),
      std::move(prov),
  };
  for (const auto& row : j.at("S_prime")) {
    std::vector<ECPoint> tuple;
    for (const auto& pt : row) tuple.push_back(point_from_json(pt));
    desc.S_prime.push_back(std::move(tuple));
  }
  return desc;
}

Json report_to_json(const SearchReport& report) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "search_report";
  out["bound"] = report.bound;
  out["mode"] = to_string(report.mode);
  Json zeros = Json::array();
  for (const auto& z : report.f_zeros) zeros.push_back(vec_to_json(z));
  out["f_zeros"] = std::move(zeros);
  Json wits = Json::array();
  for (const auto& g : report.sigma_witnesses) {
    Json w;
    w["a"] = vec_to_json(g.a);
    w["eps"] = g.eps;
    wits.push_back(std::move(w));
  }
  out["sigma_witnesses"] = std::move(wits);
  out["consistent"] = report.consistent;
  out["instance"] = instance_to_json(report.instance);
  return out;
}

Json stabilizer_to_json(int n, int bound, const std::vector<AffineLatticeMap>& maps) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "stabilizer";
  out["n"] = n;
  out["bound"] = bound;
  out["count"] = maps.size();
  Json items = Json::array();
  for (const auto& m : maps) {
    Json entry;
    Json rows = Json::array();
    for (const auto& row : m.A) rows.push_back(vec_to_json(row));
    entry["A"] = std::move(rows);
    entry["b"] = vec_to_json(m.b);
    items.push_back(std::move(entry));
  }
  out["maps"] = std::move(items);
  out["all_g_form"] = true;  // enforced by construction in stabilizer_bruteforce
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace diored
