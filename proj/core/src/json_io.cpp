#include "quiverfold/json_io.hpp"

#include <stdexcept>

namespace qf {

Json to_json(const Scalar& s) {
  if (s.is_rational()) return rational_to_string(s.rational());
  Json c = Json::array();
  for (const auto& q : s.coeffs(s.order())) c.push_back(rational_to_string(q));
  return Json{{"coeffs", c}, {"order", s.order()}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_object()) {
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(c.is_string() ? parse_rational(c.get<std::string>())
                                                                    : Rational(c.get<long>()));
    return Scalar::from_coeffs(j.at("order").get<int>(), std::move(cs));
  }
  throw std::invalid_argument("scalar: expected a string, an integer or {coeffs, order}");
}

Json to_json(const Matrix& m) {
  Json e = Json::array();
  for (const auto& s : m.entries()) e.push_back(to_json(s));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Matrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<size_t>();
  const auto cols = j.at("cols").get<size_t>();
  const auto& e = j.at("entries");
  if (e.size() != rows * cols) throw std::invalid_argument("matrix: entries length must be rows*cols");
  std::vector<Scalar> a;
  a.reserve(e.size());
  for (const auto& s : e) a.push_back(scalar_from_json(s));
  return Matrix(rows, cols, std::move(a));
}

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"src", q.vertex_id(a.src)}, {"tgt", q.vertex_id(a.tgt)},
                      {"bar", q.arrow(a.bar).id}});
  Json orient = Json::array();
  for (size_t h : q.omega()) orient.push_back(q.arrow(h).id);
  return Json{{"vertices", q.vertices()}, {"arrows", arrows}, {"orientation", orient}};
}

Quiver quiver_from_json(const Json& j) {
  std::vector<ArrowSpec> arrows;
  for (const auto& a : j.at("arrows"))
    arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(), a.at("tgt").get<std::string>(),
                      a.at("bar").get<std::string>()});
  return Quiver(j.at("vertices").get<std::vector<std::string>>(), arrows,
                j.at("orientation").get<std::vector<std::string>>());
}

Json to_json(const Quiver& q, const AdmAut& a) {
  Json vp = Json::object(), ap = Json::object();
  for (size_t i = 0; i < q.num_vertices(); ++i) vp[q.vertex_id(i)] = q.vertex_id(a.vperm[i]);
  for (size_t h = 0; h < q.num_arrows(); ++h) ap[q.arrow(h).id] = q.arrow(a.aperm[h]).id;
  return Json{{"vertex_perm", vp}, {"arrow_perm", ap}, {"period", a.period}};
}

AdmAut aut_from_json(const Quiver& q, const Json& j) {
  const auto vp = j.at("vertex_perm").get<std::map<std::string, std::string>>();
  const int period = j.at("period").get<int>();
  if (!j.contains("arrow_perm")) return make_aut_from_vertices(q, vp, period);
  return make_aut(q, vp, j.at("arrow_perm").get<std::map<std::string, std::string>>(), period);
}

Json to_json(const AdhmDatum& x, const std::string& quiver_ref) {
  const Quiver& q = *x.quiver;
  Json v = Json::object(), w = Json::object(), B = Json::object(), G = Json::object(), D = Json::object();
  for (size_t i = 0; i < q.num_vertices(); ++i) {
    v[q.vertex_id(i)] = x.v[i];
    w[q.vertex_id(i)] = x.w[i];
    G[q.vertex_id(i)] = to_json(x.Gamma[i]);
    D[q.vertex_id(i)] = to_json(x.Delta[i]);
  }
  for (size_t h = 0; h < q.num_arrows(); ++h) B[q.arrow(h).id] = to_json(x.B[h]);
  return Json{{"quiver_ref", quiver_ref}, {"v", v}, {"w", w}, {"field_order", x.field_order()},
              {"B", B}, {"Gamma", G}, {"Delta", D}};
}

AdhmDatum adhm_from_json(QuiverPtr q, const Json& j) {
  std::vector<size_t> v(q->num_vertices()), w(q->num_vertices());
  for (size_t i = 0; i < q->num_vertices(); ++i) {
    v[i] = j.at("v").at(q->vertex_id(i)).get<size_t>();
    w[i] = j.at("w").at(q->vertex_id(i)).get<size_t>();
  }
  AdhmDatum x = AdhmDatum::zero(q, v, w);
  for (size_t i = 0; i < q->num_vertices(); ++i) {
    if (j.contains("Gamma") && j["Gamma"].contains(q->vertex_id(i)))
      x.Gamma[i] = matrix_from_json(j["Gamma"][q->vertex_id(i)]);
    if (j.contains("Delta") && j["Delta"].contains(q->vertex_id(i)))
      x.Delta[i] = matrix_from_json(j["Delta"][q->vertex_id(i)]);
  }
  for (size_t h = 0; h < q->num_arrows(); ++h)
    if (j.contains("B") && j["B"].contains(q->arrow(h).id)) x.B[h] = matrix_from_json(j["B"][q->arrow(h).id]);
  x.check_shapes();
  return x;
}

Json to_json(const SplitQuotient& sq, const Quiver& q) {
  Json reps = Json::array();
  for (size_t r : sq.reps) reps.push_back(q.vertex_id(r));
  Json orbits = Json::array();
  for (const auto& o : sq.arrow_orbits) {
    Json ids = Json::array();
    for (size_t h : o) ids.push_back(q.arrow(h).id);
    orbits.push_back(ids);
  }
  return Json{{"period", sq.period},
              {"representatives", reps},
              {"arrow_orbits", orbits},
              {"quiver", to_json(sq.split)},
              {"automorphism", to_json(sq.split, sq.aut)}};
}

Json to_json(const FoldContext& ctx) {
  const Quiver& q = *ctx.quiver;
  Json phi = Json::object(), sigma = Json::object(), eig = Json::object(), split = Json::object();
  for (size_t i = 0; i < q.num_vertices(); ++i) {
    phi[q.vertex_id(i)] = to_json(ctx.phi[i]);
    sigma[q.vertex_id(i)] = to_json(ctx.sigma[i]);
  }
  for (size_t r = 0; r < ctx.sq.reps.size(); ++r) {
    eig[q.vertex_id(ctx.sq.reps[r])] = to_json(ctx.eigenbasis[r]);
    split[q.vertex_id(ctx.sq.reps[r])] = ctx.w_split[r];
  }
  return Json{{"quiver", to_json(q)}, {"automorphism", to_json(q, ctx.aut)}, {"phi", phi}, {"sigma", sigma},
              {"eigenbasis", eig}, {"w_split", split}};
}

Json to_json(const FoldContext& ctx, const Decomposition& d) {
  Json vt = Json::object();
  for (size_t s = 0; s < d.vt.size(); ++s) vt[ctx.split_quiver->vertex_id(s)] = d.vt[s];
  return vt;
}

Decomposition decomposition_from_json(const FoldContext& ctx, const Json& j) {
  Decomposition d;
  d.vt.assign(ctx.split_quiver->num_vertices(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) d.vt.at(ctx.split_quiver->vertex_index(it.key())) = it.value();
  return d;
}

Json to_json(const Sl2Triple& t) { return Json{{"E", to_json(t.E)}, {"H", to_json(t.H)}, {"F", to_json(t.F)}}; }

Json to_json(const BilinearForm& f) { return Json{{"gram", to_json(f.gram)}, {"type", to_string(f.type)}}; }

}  // namespace qf
