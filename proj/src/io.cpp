#include "novikov/io.hpp"

#include "novikov/errors.hpp"

#include <fstream>

namespace novikov {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

Ring ring_of(const Json& doc, Ring fallback) {
  if (!doc.contains("coefficients")) return fallback;
  const Json& tag = doc.at("coefficients");
  if (!tag.is_string()) throw InputError("\"coefficients\" must be a string");
  return parse_ring(tag.get<std::string>());
}

Index index_from_json(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<Index>();
}

std::vector<std::string> strings_from_json(const Json& value, const char* what) {
  if (!value.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : value) {
    if (!s.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

GroupRingElement element_from_json(const Json& value, Ring ring, Index rank) {
  if (value.is_string()) return parse_group_ring(value.get<std::string>(), ring, rank);
  if (value.is_number_integer()) return GroupRingElement::constant(ring, rank, Rational(value.get<long long>()));
  throw InputError("boundary entries must be group-ring strings or integers");
}

EquivariantComplex ingest_explicit(const Json& doc) {
  const Ring ring = ring_of(doc, Ring::Z);
  const Index rank = index_from_json(require(doc, "rank"), "\"rank\"");
  if (rank < 0) throw InputError("\"rank\" must be non-negative");
  const Json& cells_json = require(doc, "cells");
  if (!cells_json.is_array() || cells_json.empty()) throw InputError("\"cells\" must be a non-empty array");
  std::vector<std::vector<std::string>> cells;
  for (const auto& degree : cells_json) cells.push_back(strings_from_json(degree, "cells per degree"));

  std::vector<GroupRingMatrix> boundaries;
  if (doc.contains("boundaries")) {
    const Json& bs = doc.at("boundaries");
    if (!bs.is_array()) throw InputError("\"boundaries\" must be an array of matrices");
    for (std::size_t k = 0; k < bs.size(); ++k) {
      const Json& m = bs[k];
      if (!m.is_array()) throw InputError("boundary " + std::to_string(k + 1) + " must be an array of rows");
      const Index rows = static_cast<Index>(m.size());
      const Index cols = rows > 0 && m[0].is_array() ? static_cast<Index>(m[0].size()) : 0;
      GroupRingMatrix out(rows, cols);
      for (Index i = 0; i < rows; ++i) {
        const Json& row = m[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
          throw InputError("boundary " + std::to_string(k + 1) + " has ragged rows");
        for (Index j = 0; j < cols; ++j) out(i, j) = element_from_json(row[static_cast<std::size_t>(j)], ring, rank);
      }
      boundaries.push_back(std::move(out));
    }
  }
  return EquivariantComplex(ring, rank, std::move(cells), std::move(boundaries));
}

EquivariantComplex ingest_presentation(const Json& doc) {
  const Ring ring = ring_of(doc, Ring::Z);
  std::vector<std::string> generators = strings_from_json(require(doc, "generators"), "\"generators\"");
  const std::vector<std::string> relators =
      doc.contains("relators") ? strings_from_json(doc.at("relators"), "\"relators\"") : std::vector<std::string>{};
  const Json& deck = require(doc, "deck_map");
  if (!deck.is_array() || deck.size() != generators.size())
    throw InputError("\"deck_map\" needs one integer vector per generator");
  Index rank = -1;
  IntMatrix map;
  for (std::size_t g = 0; g < deck.size(); ++g) {
    const Json& image = deck[g];
    if (!image.is_array()) throw InputError("\"deck_map\" entries must be integer arrays");
    if (rank < 0) {
      rank = static_cast<Index>(image.size());
      map = IntMatrix::Zero(rank, static_cast<Index>(deck.size()));
    }
    if (static_cast<Index>(image.size()) != rank) throw InputError("\"deck_map\" vectors have different lengths");
    for (Index i = 0; i < rank; ++i)
      map(i, static_cast<Index>(g)) = index_from_json(image[static_cast<std::size_t>(i)], "deck_map entry");
  }
  if (doc.contains("rank") && index_from_json(doc.at("rank"), "\"rank\"") != std::max<Index>(rank, 0))
    throw InputError("\"rank\" disagrees with the deck_map vectors");
  if (rank < 0) map = IntMatrix::Zero(index_from_json(require(doc, "rank"), "\"rank\""), 0);
  return fox_boundary(parse_presentation(std::move(generators), relators), map, ring);
}

}  // namespace

EquivariantComplex ingest(const Json& doc) {
  if (!doc.is_object()) throw InputError("complex document must be a JSON object");
  if (doc.contains("generators")) return ingest_presentation(doc);
  return ingest_explicit(doc);
}

EquivariantComplex ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return ingest(doc);
}

Json to_json(const EquivariantComplex& x) {
  Json doc;
  doc["coefficients"] = ring_name(x.ring());
  doc["rank"] = x.rank();
  doc["cells"] = x.all_cells();
  Json boundaries = Json::array();
  for (const auto& m : x.boundaries()) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(std::move(row));
    }
    boundaries.push_back(std::move(rows));
  }
  doc["boundaries"] = std::move(boundaries);
  return doc;
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw InputError("rationals must be integers or \"p/q\" strings");
}

Polytope polytope_from_json(const Json& doc) {
  const Json& vs = require(doc, "vertices");
  if (!vs.is_array() || vs.empty()) throw InputError("\"vertices\" must be a non-empty array");
  std::vector<CohomologyClass> vertices;
  for (const auto& v : vs) {
    if (!v.is_array()) throw InputError("each vertex must be an array of periods");
    RationalVector periods(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) periods(static_cast<Index>(i)) = rational_from_json(v[i]);
    vertices.emplace_back(std::move(periods));
  }
  Polytope p(std::move(vertices));
  if (doc.contains("rank") && index_from_json(doc.at("rank"), "\"rank\"") != p.rank())
    throw InputError("\"rank\" disagrees with the vertex length");
  return p;
}

Json to_json(const CohomologyClass& a) {
  Json out = Json::array();
  for (Index i = 0; i < a.rank(); ++i) out.push_back(format_rational(a.periods()(i)));
  return out;
}

Json to_json(const Polytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return Json{{"rank", p.rank()}, {"vertices", std::move(vs)}};
}

namespace {

Json vector_json(const LatticeVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

Json to_json(const RingSummary& ring) {
  Json out;
  out["kind"] = ring.kind;
  Json rays = Json::array();
  for (const auto& r : ring.rays) rays.push_back(vector_json(r));
  out["rays"] = std::move(rays);
  if (ring.kind == "polytope") out["restricted"] = ring.restricted;
  out["cover_rank"] = ring.cover_rank;
  Json kernel = Json::array();
  for (Index j = 0; j < ring.cover_kernel.cols(); ++j) kernel.push_back(vector_json(ring.cover_kernel.col(j)));
  out["cover_kernel"] = std::move(kernel);
  return out;
}

Json to_json(const BettiReport& report) {
  Json out;
  out["betti"] = report.betti;
  out["chi"] = report.chi;
  out["ring"] = to_json(report.ring);
  out["method"] = method_name(report.method);
  out["exact"] = report.exact;
  Json checks = Json::object();
  for (const auto& [k, v] : report.checks) checks[k] = v;
  out["checks"] = std::move(checks);
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

Json to_json(const OracleResult& result) {
  return Json{{"boundary_ranks", result.boundary_ranks},
              {"betti", result.betti},
              {"order", format_rational(result.order)},
              {"method", method_name(RankMethod::TruncatedOracle)}};
}

Json to_json(const MainTheoremReport& report) {
  Json out;
  out["a"] = to_json(report.a);
  out["b"] = to_json(report.b);
  out["full_from_a"] = to_json(report.full_from_a);
  out["full_from_b"] = to_json(report.full_from_b);
  out["restricted_from_a"] = to_json(report.restricted_from_a);
  out["restricted_from_b"] = to_json(report.restricted_from_b);
  Json checks = Json::object();
  for (const auto& [k, v] : report.checks) checks[k] = v;
  out["checks"] = std::move(checks);
  out["passed"] = report.passed();
  return out;
}

Json to_json(const ApproximationFamily& family) {
  Json classes = Json::array();
  for (const auto& b : family.classes) classes.push_back(to_json(b));
  return Json{{"target", to_json(family.target)},
              {"tolerance", format_rational(family.tolerance)},
              {"image_rank", family.image_rank},
              {"classes", std::move(classes)},
              {"common_denominator", family.common_denominator.str()},
              {"checks",
               {{"distinct", family.distinct},
                {"within_tolerance", family.within_tolerance},
                {"kernel_containing", family.kernel_containing},
                {"spanning", family.spanning}}}};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace novikov
