#include "subsetfactor/notation.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

#include "subsetfactor/error.hpp"

namespace subsetfactor {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec result = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek_lower() const {
    return pos_ < text_.size() ? static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_]))) : '\0';
  }

  bool accept_keyword(std::string_view kw) {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    }
    pos_ += kw.size();
    return true;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("number out of range");
    }
    return value;
  }

  GroupSpec parse_product() {
    GroupSpec acc = parse_term();
    for (;;) {
      skip_space();
      if (peek_lower() != 'x') return acc;
      ++pos_;
      acc = GroupSpec::product(std::move(acc), parse_term());
    }
  }

  GroupSpec parse_term() {
    skip_space();
    const std::size_t start = pos_;
    GroupSpec out;
    if (accept_keyword("(")) {
      out = parse_product();
      expect(')');
      return out;
    }
    if (accept_keyword("heis")) {
      out.variant = spec::Heisenberg{number()};
    } else if (accept_keyword("sd(")) {
      const unsigned m = number();
      expect(',');
      const unsigned k = number();
      expect(',');
      const unsigned t = number();
      expect(')');
      out.variant = spec::SemidirectCyclic{m, k, t};
    } else if (accept_keyword("file:")) {
      std::string path(text_.substr(pos_));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) fail("file: needs a path");
      pos_ = text_.size();
      out.variant = spec::FromTable{std::move(path)};
    } else if (accept_keyword("perm:")) {
      out.variant = spec::FromPermutations{permutation_list()};
    } else if (accept_keyword("q8")) {
      out.variant = spec::Quaternion8{};
    } else if (accept_keyword("c")) {
      out.variant = spec::Cyclic{number()};
    } else if (accept_keyword("d")) {
      out.variant = spec::Dihedral{number()};
    } else if (accept_keyword("s")) {
      out.variant = spec::Symmetric{number()};
    } else if (accept_keyword("a")) {
      out.variant = spec::Alternating{number()};
    } else {
      fail("expected a group family (C, D, Q8, S, A, Heis, sd, file:, perm:)");
    }
    try {
      validate_spec(out);
    } catch (const InvalidGroup& e) {
      throw ParseError(e.what(), start);
    }
    return out;
  }

  std::vector<Permutation> permutation_list() {
    expect('[');
    std::vector<std::vector<std::vector<std::uint32_t>>> all_cycles;
    std::uint32_t degree = 1;
    for (;;) {
      auto& cycles = all_cycles.emplace_back();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '(' starting a permutation");
      while (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        skip_space();
        std::vector<std::uint32_t> cycle;
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
        } else {
          for (;;) {
            const std::size_t at = pos_;
            const unsigned p = number();
            if (p == 0) {
              pos_ = at;
              fail("points are numbered from 1");
            }
            cycle.push_back(p);
            degree = std::max(degree, p);
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
              ++pos_;
              continue;
            }
            expect(')');
            break;
          }
        }
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_space();
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ';') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    std::vector<Permutation> perms;
    for (const auto& cycles : all_cycles) {
      try {
        perms.push_back(permutation_from_cycles(cycles, degree));
      } catch (const InvalidGroup& e) {
        fail(e.what());
      }
    }
    return perms;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::vector<WordFactor> parse_word(std::string_view text) {
  std::vector<WordFactor> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, pos); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) fail("empty word");
  for (;;) {
    skip();
    WordFactor f;
    if (pos < text.size() && text[pos] == '1' &&
        (pos + 1 == text.size() || text[pos + 1] == '*' || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      f.name = "1";
    } else {
      const std::size_t start = pos;
      if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        ++pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      }
      if (start == pos) fail("expected a generator name");
      f.name = std::string(text.substr(start, pos - start));
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        const std::size_t es = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        long long e = 0;
        const char* first = text.data() + es + (es < text.size() && text[es] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, text.data() + pos, e);
        if (ec != std::errc{} || ptr != text.data() + pos) {
          pos = es;
          fail("malformed exponent");
        }
        if (e == 0) {
          pos = es;
          fail("exponent must be nonzero");
        }
        f.exponent = e;
      }
    }
    out.push_back(std::move(f));
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '*') fail("expected '*' between factors");
    ++pos;
  }
  return out;
}

Element parse_element_word(const Group& g, std::string_view text) {
  const std::string_view t = trim(text);
  if (auto exact = g.find_element(t)) return *exact;
  const auto factors = parse_word(t);
  Element acc = g.identity();
  std::size_t offset = static_cast<std::size_t>(t.data() - text.data());
  for (const auto& f : factors) {
    if (f.name == "1") continue;
    auto sym = g.symbol(f.name);
    if (!sym) {
      const std::size_t at = std::string_view(text).find(f.name, offset);
      throw ParseError("unknown generator '" + f.name + "' in group " + g.name(),
                       at == std::string_view::npos ? offset : at);
    }
    acc = g.mul(acc, g.pow(*sym, f.exponent));
  }
  return acc;
}

std::vector<std::string> split_word_list(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = trim(t.substr(1, t.size() - 2));
  std::vector<std::string> out;
  if (t.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i == t.size() || (t[i] == ',' && depth == 0)) {
      const auto item = trim(t.substr(start, i - start));
      if (item.empty()) throw ParseError("empty element in list", start);
      out.emplace_back(item);
      start = i + 1;
    } else if (t[i] == '(' || t[i] == '[') {
      ++depth;
    } else if (t[i] == ')' || t[i] == ']') {
      --depth;
    }
  }
  return out;
}

Subset parse_subset(const Group& g, std::string_view comma_separated) {
  return parse_subset(g, split_word_list(comma_separated));
}

Subset parse_subset(const Group& g, const std::vector<std::string>& words) {
  Subset s(g.order());
  for (const auto& w : words) s.insert(parse_element_word(g, w));
  return s;
}

std::vector<std::string> subset_names(const Group& g, const Subset& a) {
  std::vector<std::string> out;
  a.for_each([&](Element x) { out.push_back(g.element_name(x)); });
  return out;
}

std::string format_subset(const Group& g, const Subset& a) {
  std::string out = "{";
  bool first = true;
  a.for_each([&](Element x) {
    if (!first) out += ", ";
    out += g.element_name(x);
    first = false;
  });
  return out + "}";
}

SubsetFile load_subset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open subset file '" + path + "'");
  try {
    const auto doc = nlohmann::json::parse(in);
    return SubsetFile{doc.at("group").get<std::string>(), doc.at("elements").get<std::vector<std::string>>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error("subset file '" + path + "': " + e.what());
  }
}

nlohmann::json to_json(const SubsetFile& file) {
  return nlohmann::json{{"group", file.group}, {"elements", file.elements}};
}

nlohmann::json group_to_json(const Group& g) {
  nlohmann::json table = nlohmann::json::array();
  for (Element x = 0; x < g.order(); ++x) {
    auto row = g.row(x);
    table.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& s : g.symbols()) gens[s.name] = s.element;
  return nlohmann::json{{"name", g.name()},
                        {"order", g.order()},
                        {"elements", std::vector<std::string>(g.element_names().begin(), g.element_names().end())},
                        {"table", table},
                        {"generators", gens}};
}

nlohmann::json to_json(const ReportEnvelope& r) {
  nlohmann::json j{{"command", r.command},
                   {"group", r.group},
                   {"order", r.group_order},
                   {"verdict", r.verdict}};
  if (r.witness) j["witness"] = *r.witness;
  if (r.complement) j["complement"] = *r.complement;
  if (!r.counters.empty()) j["counters"] = r.counters;
  if (!r.details.empty()) j["details"] = r.details;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace subsetfactor
