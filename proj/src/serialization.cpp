#include "braidforge/serialization.hpp"

#include "braidforge/error.hpp"

namespace braidforge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

Json to_json(const NormalForm& nf) {
  Json factors = Json::array();
  for (const auto& f : nf.factors) factors.push_back(f.one_based());
  return {{"n", nf.strands}, {"delta", nf.delta_power}, {"factors", factors}};
}

Json to_json(const qp::QPCertificate& cert) {
  Json bands = Json::array();
  for (const auto& b : cert.bands()) bands.push_back({{"conj", format_word(b.conjugator)}, {"gen", b.gen}});
  return {{"n", cert.strands()}, {"bands", bands}};
}

qp::QPCertificate certificate_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  std::vector<qp::Band> bands;
  for (const auto& b : field(j, "bands"))
    bands.push_back({parse_word(get<std::string>(b, "conj"), n), get<int>(b, "gen")});
  return qp::QPCertificate(n, std::move(bands));
}

Json to_json(const cabling::RegularForm& rf) {
  Json interiors = Json::array();
  for (std::size_t i = 0; i < rf.interiors.size(); ++i)
    interiors.push_back({{"orbit", i}, {"word", format_word(rf.interiors[i])}});
  return {{"tubular", format_word(rf.tubular)}, {"widths", rf.widths}, {"interiors", interiors}};
}

cabling::RegularForm regular_form_from_json(const Json& j) {
  const auto widths = get<std::vector<int>>(j, "widths");
  auto tubular = parse_word(get<std::string>(j, "tubular"), static_cast<int>(widths.size()));
  auto rf = cabling::with_trivial_interiors(std::move(tubular), widths);
  if (j.contains("interiors")) {
    for (const auto& entry : j.at("interiors")) {
      const auto orbit = get<int>(entry, "orbit");
      if (orbit < 0 || orbit >= static_cast<int>(rf.interiors.size()))
        throw InvalidArgument("orbit index " + std::to_string(orbit) + " out of range");
      rf.interiors[orbit] = parse_word(get<std::string>(entry, "word"), rf.interiors[orbit].strands());
    }
  }
  return rf;
}

cabling::TubePositionAssignment assignment_from_json(const Json& j, BraidWord& tubular) {
  const auto widths = get<std::vector<int>>(j, "widths");
  const auto positions = get<std::vector<std::string>>(j, "positions");
  if (positions.size() != widths.size()) throw InvalidArgument("expected one interior word per tube position");
  tubular = parse_word(get<std::string>(j, "tubular"), static_cast<int>(widths.size()));
  cabling::TubePositionAssignment out;
  for (std::size_t a = 0; a < widths.size(); ++a) {
    if (widths[a] < 1) throw InvalidArgument("tube widths must be positive");
    out.interiors.push_back(parse_word(positions[a], widths[a]));
  }
  return out;
}

Json to_json(const IntMatrix& m, int n, int k) {
  return {{"n", n}, {"k", k}, {"dim", m.rows()}, {"rows", m.to_rows()}};
}

Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return {{"dim", m.dim()}, {"rows", rows}};
}

Json to_json(const cover::CoverData& d) {
  return {{"n", d.n},
          {"k", d.k},
          {"euler_char", d.euler_char},
          {"boundary_components", d.boundary_components},
          {"genus", d.genus},
          {"h1_rank", d.h1_rank}};
}

}  // namespace braidforge
