#include "chaoslab/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "chaoslab/errors.hpp"

namespace chaoslab {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(Errc::validation_error, path + ": " + message);
}

void reject_unknown(const ordered_json& obj, const std::string& path,
                    const std::vector<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const auto& name : allowed) {
      if (it.key() == name) {
        known = true;
        break;
      }
    }
    if (!known) fail(path.empty() ? it.key() : path + "." + it.key(),
                     "unknown field");
  }
}

const ordered_json& require(const ordered_json& obj, const std::string& path,
                            const std::string& name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    fail(path.empty() ? name : path + "." + name, "missing field");
  }
  return *it;
}

int require_int(const ordered_json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<int>();
}

long long require_long(const ordered_json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<long long>();
}

std::vector<int> require_int_array(const ordered_json& value,
                                   const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < value.size(); ++i) {
    out.push_back(require_int(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<int>> require_matrix(const ordered_json& value,
                                             const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array of rows");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < value.size(); ++i) {
    out.push_back(
        require_int_array(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Cardinal require_cardinal(const ordered_json& value, const std::string& path) {
  if (value.is_number_unsigned() || value.is_number_integer()) {
    const long long n = value.get<long long>();
    if (n < 0) fail(path, "cardinals are nonnegative");
    return Cardinal::finite(static_cast<std::uint64_t>(n));
  }
  if (value.is_string()) {
    if (auto parsed = Cardinal::parse(value.get<std::string>())) return *parsed;
    fail(path, "expected \"aleph<k>\" or a nonnegative integer");
  }
  fail(path, "expected a cardinal");
}

IdealSpec parse_ideal(const ordered_json& value, const std::string& path) {
  if (value.is_string()) {
    if (value.get<std::string>() == "full") return IdealSpec::full();
    fail(path, "the only string ideal is \"full\"");
  }
  if (!value.is_object()) fail(path, "expected an ideal object or \"full\"");
  reject_unknown(value, path, {"carrier", "kappa"});
  const bool has_carrier = value.contains("carrier");
  const bool has_kappa = value.contains("kappa");
  if (has_carrier == has_kappa) {
    fail(path, "an ideal is either {\"carrier\": [...]} or {\"kappa\": ...}");
  }
  if (has_carrier) {
    return IdealSpec::finite_carrier(
        require_int_array(value["carrier"], path + ".carrier"));
  }
  return IdealSpec::cardinal_bound(
      require_cardinal(value["kappa"], path + ".kappa"));
}

std::vector<IdealSpec> parse_ideals(const ordered_json& doc) {
  std::vector<IdealSpec> out;
  if (!doc.contains("ideals")) return out;
  const ordered_json& arr = doc["ideals"];
  if (!arr.is_array()) fail("ideals", "expected an array");
  for (size_t i = 0; i < arr.size(); ++i) {
    out.push_back(parse_ideal(arr[i], "ideals[" + std::to_string(i) + "]"));
  }
  return out;
}

Rational parse_rational(const ordered_json& value, const std::string& path) {
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    const size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text));
      const long long num = std::stoll(text.substr(0, slash));
      const long long den = std::stoll(text.substr(slash + 1));
      if (den == 0) fail(path, "zero denominator");
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      fail(path, "expected an integer or \"p/q\"");
    } catch (const std::out_of_range&) {
      fail(path, "rational out of range");
    }
  }
  fail(path, "metric entries are integers or \"p/q\" strings");
}

ordered_json cardinal_json(const Cardinal& c) {
  if (c.is_finite()) return ordered_json(c.finite_value());
  return ordered_json(c.to_string());
}

ordered_json ideal_json(const IdealSpec& ideal) {
  switch (ideal.kind()) {
    case IdealSpec::Kind::full:
      return ordered_json("full");
    case IdealSpec::Kind::finite_carrier:
      return ordered_json{{"carrier", ideal.carrier()}};
    case IdealSpec::Kind::cardinal_bound:
      return ordered_json{{"kappa", cardinal_json(ideal.kappa())}};
  }
  return ordered_json();
}

ordered_json rational_json(const Rational& r) {
  if (r.denominator() == 1) return ordered_json(r.numerator());
  return ordered_json(std::to_string(r.numerator()) + "/" +
                      std::to_string(r.denominator()));
}

}  // namespace

std::string kind_name(InstanceDocument::Kind kind) {
  switch (kind) {
    case InstanceDocument::Kind::finite_action: return "finite-action";
    case InstanceDocument::Kind::iterated_system: return "iterated-system";
    case InstanceDocument::Kind::fort_spec: return "fort-spec";
    case InstanceDocument::Kind::translation_action: return "translation";
  }
  return "?";
}

InstanceDocument parse_instance_text(const std::string& text,
                                     const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line/column from the byte offset for a usable message.
    size_t line = 1, column = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(Errc::parse_error,
                origin + ":" + std::to_string(line) + ":" +
                    std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) fail("", "instance must be a JSON object");
  if (require_int(require(doc, "", "schema"), "schema") != 1) {
    fail("schema", "unsupported schema version");
  }
  const ordered_json& kind_field = require(doc, "", "kind");
  if (!kind_field.is_string()) fail("kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();

  InstanceDocument out;
  if (kind == "finite-action") {
    out.kind = InstanceDocument::Kind::finite_action;
    reject_unknown(doc, "", {"schema", "kind", "phase", "semigroup", "act",
                             "ideals"});
    const int phase = require_int(require(doc, "", "phase"), "phase");
    const ordered_json& sg = require(doc, "", "semigroup");
    if (!sg.is_object()) fail("semigroup", "expected an object");
    reject_unknown(sg, "semigroup", {"elements", "compose", "identity"});
    const int elements =
        require_int(require(sg, "semigroup", "elements"), "semigroup.elements");
    const auto compose =
        require_matrix(require(sg, "semigroup", "compose"), "semigroup.compose");
    if (static_cast<int>(compose.size()) != elements) {
      fail("semigroup.compose", "expected " + std::to_string(elements) +
                                    " rows, got " +
                                    std::to_string(compose.size()));
    }
    const int identity =
        require_int(require(sg, "semigroup", "identity"), "semigroup.identity");
    const auto act = require_matrix(require(doc, "", "act"), "act");
    if (static_cast<int>(act.size()) != phase) {
      fail("act", "expected " + std::to_string(phase) + " rows, got " +
                      std::to_string(act.size()));
    }
    for (size_t x = 0; x < act.size(); ++x) {
      if (static_cast<int>(act[x].size()) != elements) {
        fail("act[" + std::to_string(x) + "]",
             "expected " + std::to_string(elements) + " entries");
      }
    }
    try {
      out.finite = FiniteAction::from_table(
          FiniteSemigroup::from_table(compose, identity), act);
    } catch (const Error& e) {
      throw Error(Errc::validation_error, std::string("instance: ") + e.what());
    }
  } else if (kind == "iterated-system") {
    out.kind = InstanceDocument::Kind::iterated_system;
    reject_unknown(doc, "", {"schema", "kind", "phase", "step", "metric",
                             "ideals"});
    const int phase = require_int(require(doc, "", "phase"), "phase");
    const auto step = require_int_array(require(doc, "", "step"), "step");
    if (static_cast<int>(step.size()) != phase) {
      fail("step", "expected " + std::to_string(phase) + " entries");
    }
    const ordered_json& metric = require(doc, "", "metric");
    try {
      if (metric.is_string() && metric.get<std::string>() == "discrete") {
        out.iterated = IteratedSystem::discrete(step);
      } else if (metric.is_array()) {
        std::vector<std::vector<Rational>> rows;
        for (size_t i = 0; i < metric.size(); ++i) {
          if (!metric[i].is_array()) {
            fail("metric[" + std::to_string(i) + "]", "expected a row");
          }
          std::vector<Rational> row;
          for (size_t j = 0; j < metric[i].size(); ++j) {
            row.push_back(parse_rational(
                metric[i][j],
                "metric[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
          }
          rows.push_back(std::move(row));
        }
        out.iterated = IteratedSystem::with_metric(step, std::move(rows));
      } else {
        fail("metric", "expected \"discrete\" or a matrix");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::validation_error) {
        throw Error(Errc::validation_error, std::string("instance: ") + e.what());
      }
      throw;
    }
  } else if (kind == "fort-spec") {
    out.kind = InstanceDocument::Kind::fort_spec;
    reject_unknown(doc, "", {"schema", "kind", "abelian", "group_size",
                             "classes", "ideals"});
    FortGroupSpec spec;
    const ordered_json& abelian = require(doc, "", "abelian");
    if (!abelian.is_boolean()) fail("abelian", "expected a boolean");
    spec.abelian = abelian.get<bool>();
    spec.group_size =
        require_cardinal(require(doc, "", "group_size"), "group_size");
    const ordered_json& classes = require(doc, "", "classes");
    if (!classes.is_array()) fail("classes", "expected an array");
    for (size_t i = 0; i < classes.size(); ++i) {
      const std::string path = "classes[" + std::to_string(i) + "]";
      const ordered_json& cls = classes[i];
      if (!cls.is_object()) fail(path, "expected an object");
      reject_unknown(cls, path, {"label", "points", "orbit", "stabilizer"});
      OrbitClass oc;
      oc.label = cls.contains("label") ? cls["label"].get<std::string>()
                                       : "class" + std::to_string(i);
      oc.point_count = require_cardinal(require(cls, path, "points"),
                                        path + ".points");
      oc.orbit_size =
          require_cardinal(require(cls, path, "orbit"), path + ".orbit");
      oc.stabilizer_size = require_cardinal(require(cls, path, "stabilizer"),
                                            path + ".stabilizer");
      spec.classes.push_back(std::move(oc));
    }
    try {
      spec.validate();
    } catch (const Error& e) {
      throw Error(Errc::validation_error, std::string("instance: ") + e.what());
    }
    out.fort = std::move(spec);
  } else if (kind == "translation") {
    out.kind = InstanceDocument::Kind::translation_action;
    reject_unknown(doc, "", {"schema", "kind", "rank", "coefficients",
                             "real_factor", "k_card", "ideals"});
    TranslationActionSpec spec;
    if (doc.contains("real_factor")) {
      if (!doc["real_factor"].is_boolean()) {
        fail("real_factor", "expected a boolean");
      }
      spec.real_factor = doc["real_factor"].get<bool>();
    }
    if (doc.contains("rank")) {
      spec.rank = require_int(doc["rank"], "rank");
    }
    if (doc.contains("coefficients")) {
      spec.coefficients.clear();
      const ordered_json& coeffs = doc["coefficients"];
      if (!coeffs.is_array()) fail("coefficients", "expected an array");
      for (size_t i = 0; i < coeffs.size(); ++i) {
        spec.coefficients.push_back(require_long(
            coeffs[i], "coefficients[" + std::to_string(i) + "]"));
      }
    }
    if (doc.contains("k_card")) {
      spec.k_card = require_cardinal(doc["k_card"], "k_card");
    }
    try {
      spec.validate();
    } catch (const Error& e) {
      throw Error(Errc::validation_error, std::string("instance: ") + e.what());
    }
    out.translation = std::move(spec);
  } else {
    fail("kind", "unknown kind \"" + kind + "\"");
  }
  out.ideals = parse_ideals(doc);

  // Canonical echo, field order fixed by construction.
  out.normalized = ordered_json::object();
  out.normalized["schema"] = 1;
  out.normalized["kind"] = kind_name(out.kind);
  switch (out.kind) {
    case InstanceDocument::Kind::finite_action: {
      out.normalized["phase"] = out.finite->phase_size();
      out.normalized["semigroup"] = {
          {"elements", out.finite->semigroup().size()},
          {"compose", out.finite->semigroup().table_rows()},
          {"identity", out.finite->semigroup().identity()}};
      out.normalized["act"] = out.finite->act_rows();
      break;
    }
    case InstanceDocument::Kind::iterated_system: {
      out.normalized["phase"] = out.iterated->phase_size();
      out.normalized["step"] = out.iterated->step();
      if (out.iterated->discrete_metric()) {
        out.normalized["metric"] = "discrete";
      } else {
        std::vector<std::vector<ordered_json>> rows;
        for (int x = 0; x < out.iterated->phase_size(); ++x) {
          std::vector<ordered_json> row;
          for (int y = 0; y < out.iterated->phase_size(); ++y) {
            row.push_back(rational_json(out.iterated->dist(x, y)));
          }
          rows.push_back(std::move(row));
        }
        out.normalized["metric"] = rows;
      }
      break;
    }
    case InstanceDocument::Kind::fort_spec: {
      out.normalized["abelian"] = out.fort->abelian;
      out.normalized["group_size"] = cardinal_json(out.fort->group_size);
      ordered_json classes = ordered_json::array();
      for (const OrbitClass& cls : out.fort->classes) {
        classes.push_back({{"label", cls.label},
                           {"points", cardinal_json(cls.point_count)},
                           {"orbit", cardinal_json(cls.orbit_size)},
                           {"stabilizer", cardinal_json(cls.stabilizer_size)}});
      }
      out.normalized["classes"] = std::move(classes);
      break;
    }
    case InstanceDocument::Kind::translation_action: {
      out.normalized["rank"] = out.translation->rank;
      out.normalized["coefficients"] = out.translation->coefficients;
      if (out.translation->real_factor) {
        out.normalized["real_factor"] = true;
        out.normalized["k_card"] = cardinal_json(out.translation->k_card);
      }
      break;
    }
  }
  if (!out.ideals.empty()) {
    ordered_json ideals = ordered_json::array();
    for (const IdealSpec& ideal : out.ideals) ideals.push_back(ideal_json(ideal));
    out.normalized["ideals"] = std::move(ideals);
  }
  return out;
}

InstanceDocument parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::parse_error, path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str(), path);
}

std::string serialize_instance(const InstanceDocument& doc) {
  return doc.normalized.dump(2) + "\n";
}

}  // namespace chaoslab
