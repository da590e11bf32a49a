#include "apollo/json_io.hpp"

#include <json.hpp>

namespace apollo {

namespace {

using Json = nlohmann::ordered_json;

const char* kComponents[4] = {"xr", "yr", "beta", "gamma"};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

Json exact_symbol(const DiskSymbol<FieldElement>& d) {
  Json j;
  for (int c = 0; c < 4; ++c) j[kComponents[c]] = to_string(d(c));
  return j;
}

Json float_symbol(const DiskSymbol<double>& d) {
  Json j;
  for (int c = 0; c < 4; ++c) j[kComponents[c]] = d(c);
  return j;
}

Json approx_block(const DiskSymbol<FieldElement>& d) {
  constexpr int digits = 12;
  Json a;
  if (d(kBeta).is_zero()) {
    a["nx"] = to_decimal(d(kXr), digits);
    a["ny"] = to_decimal(d(kYr), digits);
    a["s"] = to_decimal(d(kGamma) * FieldElement(Rational(1, 2)), digits);
  } else {
    const FieldElement r = inverse(d(kBeta));
    a["cx"] = to_decimal(d(kXr) * r, digits);
    a["cy"] = to_decimal(d(kYr) * r, digits);
    a["r"] = to_decimal(r, digits);
  }
  return a;
}

DiskSymbol<FieldElement> read_exact(const Json& j, const std::string& path) {
  DiskSymbol<FieldElement> d;
  for (int c = 0; c < 4; ++c) {
    const std::string p = path + "/" + kComponents[c];
    const Json& v = member(j, kComponents[c], path);
    if (v.is_number_integer()) {
      d(c) = FieldElement(Rational(v.get<long>()));
      continue;
    }
    if (!v.is_string()) fail(p, "expected an exact string");
    try {
      d(c) = parse_field_element(v.get<std::string>());
    } catch (const Error& e) {
      fail(p, e.what());
    }
  }
  return d;
}

DiskSymbol<double> read_float(const Json& j, const std::string& path) {
  DiskSymbol<double> d;
  for (int c = 0; c < 4; ++c) {
    const Json& v = member(j, kComponents[c], path);
    if (!v.is_number()) fail(path + "/" + kComponents[c], "expected a number");
    d(c) = v.get<double>();
  }
  return d;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json classification_block(const Packing& p) {
  Json j;
  try {
    const Classification c = classify(p);
    j["type"] = to_string(c.type);
    Json e;
    e["min_curvature"] = c.min_curvature;
    e["min_curvature_approx"] = c.min_curvature_approx;
    e["min_attained"] = c.min_attained;
    e["zero_curvature_count"] = c.zero_curvature_count;
    e["negative_curvature_count"] = c.negative_curvature_count;
    e["unbounded_by_construction"] = c.unbounded_by_construction;
    j["evidence"] = e;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inconclusive && e.kind() != ErrorKind::EmptyPacking) throw;
    j["type"] = nullptr;
    j["reason"] = e.what();
  }
  return j;
}

}  // namespace

std::string export_json(const Packing& p) {
  const bool exact = p.mode == Mode::exact;
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["mode"] = to_string(p.mode);
  doc["seed_name"] = p.seed.name;
  doc["unbounded_by_construction"] = p.seed.unbounded_by_construction;
  Json config;
  config["max_depth"] = p.max_depth ? Json(*p.max_depth) : Json(nullptr);
  config["max_curvature"] = p.max_curvature ? Json(to_string(*p.max_curvature)) : Json(nullptr);
  doc["config"] = config;

  Json seed = Json::array();
  for (int c = 0; c < 4; ++c) {
    if (exact) {
      seed.push_back(exact_symbol((*p.seed.exact).col(c)));
    } else {
      seed.push_back(float_symbol(p.seed.approx.col(c)));
    }
  }
  doc["seed"] = seed;

  Json disks = Json::array();
  for (const auto& d : p.disks) {
    Json j = exact ? exact_symbol(*d.exact) : float_symbol(d.approx);
    j["depth"] = d.depth;
    if (exact) j["approx"] = approx_block(*d.exact);
    disks.push_back(std::move(j));
  }
  doc["disks"] = disks;

  Json quads = Json::array();
  for (const auto& q : p.quadruples) quads.push_back(Json(q));
  doc["quadruples"] = quads;

  doc["classification"] = classification_block(p);
  Json stats;
  stats["disks"] = p.disks.size();
  stats["quadruples"] = p.quadruples.size();
  stats["per_depth"] = p.per_depth;
  stats["truncated"] = p.truncated;
  doc["stats"] = stats;
  return doc.dump(2) + "\n";
}

Packing import_json(std::string_view text) {
  const Json doc = parse_document(text);
  if (!doc.is_object()) fail("", "expected an object");
  if (as_int(member(doc, "format_version", ""), "/format_version") != kFormatVersion) {
    fail("/format_version", "unsupported version");
  }
  Packing p;
  const Json& mode = member(doc, "mode", "");
  if (!mode.is_string()) fail("/mode", "expected a string");
  try {
    p.mode = parse_mode(mode.get<std::string>());
  } catch (const Error& e) {
    fail("/mode", e.what());
  }
  const bool exact = p.mode == Mode::exact;

  if (auto it = doc.find("seed_name"); it != doc.end() && it->is_string()) p.seed.name = it->get<std::string>();
  if (auto it = doc.find("unbounded_by_construction"); it != doc.end()) {
    if (!it->is_boolean()) fail("/unbounded_by_construction", "expected a boolean");
    p.seed.unbounded_by_construction = it->get<bool>();
  }
  if (auto it = doc.find("config"); it != doc.end()) {
    if (auto d = it->find("max_depth"); d != it->end() && !d->is_null()) p.max_depth = as_int(*d, "/config/max_depth");
    if (auto m = it->find("max_curvature"); m != it->end() && !m->is_null()) {
      if (!m->is_string()) fail("/config/max_curvature", "expected a rational string");
      try {
        p.max_curvature = parse_rational(m->get<std::string>());
      } catch (const Error& e) {
        fail("/config/max_curvature", e.what());
      }
    }
  }

  const Json& seed = member(doc, "seed", "");
  if (!seed.is_array() || seed.size() != 4) fail("/seed", "expected 4 symbols");
  if (exact) {
    Quadruple<FieldElement> q;
    for (int c = 0; c < 4; ++c) q.col(c) = read_exact(seed[static_cast<std::size_t>(c)], "/seed/" + std::to_string(c));
    p.seed.exact = q;
    p.seed.approx = to_double(q);
  } else {
    for (int c = 0; c < 4; ++c) {
      p.seed.approx.col(c) = read_float(seed[static_cast<std::size_t>(c)], "/seed/" + std::to_string(c));
    }
  }

  const Json& disks = member(doc, "disks", "");
  if (!disks.is_array()) fail("/disks", "expected an array");
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const std::string path = "/disks/" + std::to_string(i);
    PackedDisk d;
    if (exact) {
      d.exact = read_exact(disks[i], path);
      d.approx = to_double(*d.exact);
    } else {
      d.approx = read_float(disks[i], path);
    }
    d.depth = as_int(member(disks[i], "depth", path), path + "/depth");
    p.disks.push_back(std::move(d));
  }

  if (auto it = doc.find("quadruples"); it != doc.end()) {
    if (!it->is_array()) fail("/quadruples", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "/quadruples/" + std::to_string(i);
      const Json& q = (*it)[i];
      if (!q.is_array() || q.size() != 4) fail(path, "expected 4 indices");
      std::array<int, 4> idx{};
      for (std::size_t c = 0; c < 4; ++c) {
        idx[c] = as_int(q[c], path + "/" + std::to_string(c));
        if (idx[c] < 0 || static_cast<std::size_t>(idx[c]) >= p.disks.size()) {
          fail(path + "/" + std::to_string(c), "disk index out of range");
        }
      }
      p.quadruples.push_back(idx);
    }
  }

  if (auto it = doc.find("stats"); it != doc.end() && it->is_object()) {
    if (auto d = it->find("per_depth"); d != it->end()) {
      if (!d->is_array()) fail("/stats/per_depth", "expected an array");
      for (std::size_t i = 0; i < d->size(); ++i) p.per_depth.push_back(as_int((*d)[i], "/stats/per_depth/" + std::to_string(i)));
    }
    if (auto t = it->find("truncated"); t != it->end() && t->is_boolean()) p.truncated = t->get<bool>();
  }
  return p;
}

SeedSymbols parse_seed_file(std::string_view text) {
  const Json doc = parse_document(text);
  const Json& seed = member(doc, "seed", "");
  if (!seed.is_array() || seed.size() < 3 || seed.size() > 4) fail("/seed", "expected 3 or 4 symbols");
  // Exact unless some entry is a non-integral number.
  bool exact = true;
  for (const auto& s : seed)
    for (const char* c : kComponents)
      if (auto it = s.find(c); it != s.end() && it->is_number_float()) exact = false;
  if (exact) {
    std::vector<DiskSymbol<FieldElement>> out;
    for (std::size_t i = 0; i < seed.size(); ++i) out.push_back(read_exact(seed[i], "/seed/" + std::to_string(i)));
    return out;
  }
  std::vector<DiskSymbol<double>> out;
  for (std::size_t i = 0; i < seed.size(); ++i) out.push_back(read_float(seed[i], "/seed/" + std::to_string(i)));
  return out;
}

}  // namespace apollo
