#include "macx/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace macx {

namespace {

// Character-level cursor with line/column tracking for error messages.
class Cursor {
 public:
  Cursor(const std::string& text, const std::string& source)
      : text_(text), source_(source) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (!done()) {
      const char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'" +
           (done() ? " but reached end of input" : std::string(" but found '") + peek() + "'"));
    advance();
  }

  long parse_integer() {
    skip_space_and_comments();
    std::string digits;
    if (peek() == '-') digits += advance();
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += advance();
    if (digits.empty() || digits == "-") fail("expected an integer");
    return std::stol(digits);
  }

  std::string parse_word() {
    skip_space_and_comments();
    std::string word;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      word += advance();
    if (word.empty()) fail("expected an identifier");
    return word;
  }

  std::vector<long> parse_integer_list() {
    skip_space_and_comments();
    expect('[');
    std::vector<long> out;
    skip_space_and_comments();
    if (peek() == ']') {
      advance();
      return out;
    }
    for (;;) {
      out.push_back(parse_integer());
      skip_space_and_comments();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(']');
      return out;
    }
  }

  std::vector<std::vector<long>> parse_list_of_lists() {
    skip_space_and_comments();
    expect('[');
    std::vector<std::vector<long>> out;
    skip_space_and_comments();
    if (peek() == ']') {
      advance();
      return out;
    }
    for (;;) {
      out.push_back(parse_integer_list());
      skip_space_and_comments();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(']');
      return out;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(source_ + ":" + std::to_string(line_) + ":" +
                     std::to_string(col_) + ": " + message);
  }

 private:
  const std::string& text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct KeyValues {
  std::optional<long> m;
  std::optional<std::string> kind;
  std::optional<std::vector<std::vector<long>>> lists;
  std::string list_key;
};

KeyValues parse_key_values(Cursor& cur, const std::string& list_key) {
  KeyValues kv;
  kv.list_key = list_key;
  for (;;) {
    cur.skip_space_and_comments();
    if (cur.done()) return kv;
    const std::string key = cur.parse_word();
    cur.skip_space_and_comments();
    cur.expect('=');
    if (key == "m") {
      kv.m = cur.parse_integer();
    } else if (key == "kind") {
      kv.kind = cur.parse_word();
    } else if (key == list_key) {
      kv.lists = cur.parse_list_of_lists();
    } else {
      cur.fail("unknown key '" + key + "'");
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text, const std::string& source_name) {
  Cursor cur(text, source_name);
  const KeyValues kv = parse_key_values(cur, "maximal_faces");
  if (!kv.m) throw InputError(source_name + ": missing 'm'");
  if (!kv.lists) throw InputError(source_name + ": missing 'maximal_faces'");
  const int m = static_cast<int>(*kv.m);
  check_ground_set_size(m);
  std::vector<Subset> gens;
  gens.reserve(kv.lists->size());
  for (const auto& row : *kv.lists) {
    std::vector<int> elems(row.begin(), row.end());
    gens.push_back(Subset::of(m, elems));
  }
  return SimplicialComplex::from_maximal_faces(m, gens);
}

SimplicialComplex load_complex(const std::string& path) {
  return parse_complex(read_file(path), path);
}

SubgroupSpec parse_subgroup(const std::string& text, const std::string& source_name) {
  Cursor cur(text, source_name);
  const KeyValues kv = parse_key_values(cur, "generators");
  if (!kv.kind) throw InputError(source_name + ": missing 'kind'");
  if (!kv.lists) throw InputError(source_name + ": missing 'generators'");
  if (kv.lists->empty())
    throw InputError(source_name + ": at least one generator row is required");
  const int m = kv.m ? static_cast<int>(*kv.m)
                     : static_cast<int>(kv.lists->front().size());
  if (*kv.kind == "real") {
    std::vector<std::vector<int>> rows;
    for (const auto& row : *kv.lists) rows.emplace_back(row.begin(), row.end());
    return SubgroupSpec::real(m, rows);
  }
  if (*kv.kind == "torus") return SubgroupSpec::torus(m, *kv.lists);
  throw InputError(source_name + ": unknown kind '" + *kv.kind +
                   "' (expected real or torus)");
}

SubgroupSpec load_subgroup(const std::string& path) {
  return parse_subgroup(read_file(path), path);
}

std::string format_complex_file(const SimplicialComplex& K) {
  std::string out = "m = " + std::to_string(K.m()) + "\nmaximal_faces = [";
  bool first_face = true;
  for (const Subset& a : K.maximal_faces()) {
    if (!first_face) out += ",";
    first_face = false;
    out += "[";
    bool first_elem = true;
    for (int e : a.elements()) {
      if (!first_elem) out += ",";
      first_elem = false;
      out += std::to_string(e);
    }
    out += "]";
  }
  return out + "]\n";
}

nlohmann::json subset_to_json(const Subset& a) {
  return nlohmann::json(a.elements());
}

nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, beta] : table.entries())
    entries.push_back({{"i", key.first},
                       {"a", subset_to_json(Subset::from_bits(table.m(), key.second))},
                       {"beta", beta}});
  return {{"m", table.m()},
          {"field", to_string(table.field())},
          {"entries", entries},
          {"total", table.total()}};
}

nlohmann::json poincare_to_json(const PoincarePolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [deg, dim] : p.coefficients())
    coeffs.push_back({{"degree", deg}, {"dim", dim}});
  return {{"coefficients", coeffs}, {"total", p.total()}};
}

nlohmann::json certificate_to_json(const CompressionCertificate& cert) {
  return {{"steps", cert.steps},
          {"a0", subset_to_json(cert.final_face)},
          {"bound", cert.bound},
          {"mobius_support_size", cert.mobius_support_size},
          {"holds", cert.holds()}};
}

nlohmann::json cross_validation_to_json(const CrossValidationReport& report) {
  const auto side = [](const ModelComparison& c) {
    return nlohmann::json{{"oracle", poincare_to_json(c.oracle_poly)},
                          {"hochster", poincare_to_json(c.hochster_poly)},
                          {"match", c.match}};
  };
  return {{"field", to_string(report.field)},
          {"disk2", side(report.disk2)},
          {"interval", side(report.interval)},
          {"total_dims_equal", report.total_dims_equal},
          {"ok", report.ok()}};
}

nlohmann::json hc_report_to_json(const HalperinCarlssonReport& report) {
  return {{"field", to_string(report.field)},
          {"free", report.free},
          {"r", report.r},
          {"total_dim_zk", report.total_dim_zk},
          {"total_dim_rzk", report.total_dim_rzk},
          {"lower_bound", report.lower_bound},
          {"bound_holds", report.bound_holds},
          {"rank_bound", report.rank_bound},
          {"rank_bound_holds", report.rank_bound_holds},
          {"ok", report.ok()}};
}

}  // namespace macx
