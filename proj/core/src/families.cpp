// Concrete models for the group families a GroupSpec can name.

#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "subsetfactor/error.hpp"
#include "subsetfactor/group.hpp"

namespace subsetfactor {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned pow_mod(unsigned base, unsigned exp, unsigned mod) {
  if (mod == 1) return 0;
  unsigned long long acc = 1, b = base % mod;
  for (; exp > 0; exp >>= 1U) {
    if (exp & 1U) acc = acc * b % mod;
    b = b * b % mod;
  }
  return static_cast<unsigned>(acc);
}

std::string power_name(const std::string& sym, unsigned e) {
  if (e == 0) return {};
  return e == 1 ? sym : sym + "^" + std::to_string(e);
}

std::string join_word(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += '*';
    out += p;
  }
  return out.empty() ? "1" : out;
}

Group cyclic(unsigned n, std::string name) {
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) {
    names.push_back(join_word({power_name("a", i)}));
    for (unsigned j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  const Element a = n > 1 ? 1 : 0;
  return Group(std::move(name), n, std::move(table), std::move(names), {{"a", a}}, {a});
}

// Pairs (i, j) = a^i*b^j with b*a*b^-1 = a^t, stored at index i + m*j, so
// (i,j)(i',j') = (i + i'*t^j, j + j').
Group semidirect(unsigned m, unsigned k, unsigned t, std::string name) {
  const unsigned u = t;
  const std::size_t n = static_cast<std::size_t>(m) * k;
  std::vector<unsigned> upow(k);
  for (unsigned j = 0; j < k; ++j) upow[j] = pow_mod(u, j, m);
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (unsigned j = 0; j < k; ++j) {
    for (unsigned i = 0; i < m; ++i) {
      const std::size_t x = i + static_cast<std::size_t>(m) * j;
      names[x] = join_word({power_name("a", i), power_name("b", j)});
      for (unsigned j2 = 0; j2 < k; ++j2) {
        for (unsigned i2 = 0; i2 < m; ++i2) {
          const std::size_t y = i2 + static_cast<std::size_t>(m) * j2;
          const unsigned ri = static_cast<unsigned>((i + static_cast<unsigned long long>(i2) * upow[j]) % m);
          const unsigned rj = (j + j2) % k;
          table[x * n + y] = static_cast<Element>(ri + static_cast<std::size_t>(m) * rj);
        }
      }
    }
  }
  const Element a = m > 1 ? 1 : 0;
  const Element b = k > 1 ? static_cast<Element>(m) : 0;
  return Group(std::move(name), n, std::move(table), std::move(names), {{"a", a}, {"b", b}}, {a, b});
}

Group quaternion8(std::string name) {
  // Index = 2*unit + (negative ? 1 : 0) with units 1, i, j, k.
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      const int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[ux][uy];
      table[x * 8 + y] = static_cast<Element>(2 * unit_product[ux][uy] + (sign < 0 ? 1 : 0));
    }
  }
  return Group(std::move(name), 8, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
               {{"i", 2}, {"j", 4}, {"k", 6}}, {2, 4});
}

// Upper unitriangular 3x3 matrices over F_p: (x, y, z) at index x + p*y + p^2*z
// with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
Group heisenberg(unsigned p, std::string name) {
  const std::size_t n = static_cast<std::size_t>(p) * p * p;
  auto idx = [&](unsigned x, unsigned y, unsigned z) { return static_cast<Element>(x + p * y + p * p * z); };
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (unsigned z = 0; z < p; ++z)
    for (unsigned y = 0; y < p; ++y)
      for (unsigned x = 0; x < p; ++x) {
        // (x, y, z) = a^x * b^y * c^w with w = z - x*y.
        const unsigned w = (z + p * p - (x * y) % p) % p;
        names[idx(x, y, z)] = join_word({power_name("a", x), power_name("b", y), power_name("c", w)});
        for (unsigned z2 = 0; z2 < p; ++z2)
          for (unsigned y2 = 0; y2 < p; ++y2)
            for (unsigned x2 = 0; x2 < p; ++x2)
              table[idx(x, y, z) * n + idx(x2, y2, z2)] = idx((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p);
      }
  const Element a = idx(1, 0, 0), b = idx(0, 1, 0), c = idx(0, 0, 1);
  return Group(std::move(name), n, std::move(table), std::move(names), {{"a", a}, {"b", b}, {"c", c}}, {a, b});
}

Permutation cycle_perm(std::vector<std::uint32_t> points, std::size_t degree) {
  return permutation_from_cycles({std::move(points)}, degree);
}

Group symmetric(unsigned k, std::string name) {
  std::vector<Permutation> gens;
  if (k <= 1) {
    gens.push_back(cycle_perm({}, 1));
  } else if (k == 2) {
    gens.push_back(cycle_perm({1, 2}, 2));
  } else {
    std::vector<std::uint32_t> all(k);
    std::iota(all.begin(), all.end(), 1U);
    gens.push_back(cycle_perm(all, k));
    gens.push_back(cycle_perm({1, 2}, k));
  }
  return close_permutations(gens, kMaxGroupOrder, std::move(name));
}

Group alternating(unsigned k, std::string name) {
  std::vector<Permutation> gens;
  if (k <= 2) {
    gens.push_back(cycle_perm({}, std::max(1U, k)));
  } else if (k == 3) {
    gens.push_back(cycle_perm({1, 2, 3}, 3));
  } else {
    gens.push_back(cycle_perm({1, 2, 3}, k));
    // (1..k) is even for odd k; for even k use (2..k) instead.
    std::vector<std::uint32_t> cyc;
    for (unsigned i = (k % 2 == 1 ? 1 : 2); i <= k; ++i) cyc.push_back(i);
    gens.push_back(cycle_perm(cyc, k));
  }
  return close_permutations(gens, kMaxGroupOrder, std::move(name));
}

std::string perm_list_string(const std::vector<Permutation>& perms) {
  std::string out = "perm:[";
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i) out += ';';
    out += perms[i].cycle_string();
  }
  return out + "]";
}

}  // namespace

GroupSpec GroupSpec::product(GroupSpec left, GroupSpec right) {
  return GroupSpec{spec::DirectProduct{std::make_shared<const GroupSpec>(std::move(left)),
                                       std::make_shared<const GroupSpec>(std::move(right))}};
}

std::string GroupSpec::to_string() const {
  return std::visit(
      overloaded{
          [](const spec::Cyclic& c) { return "C" + std::to_string(c.n); },
          [](const spec::Dihedral& d) { return "D" + std::to_string(d.m); },
          [](const spec::Quaternion8&) { return std::string("Q8"); },
          [](const spec::Symmetric& s) { return "S" + std::to_string(s.k); },
          [](const spec::Alternating& a) { return "A" + std::to_string(a.k); },
          [](const spec::SemidirectCyclic& s) {
            return "sd(" + std::to_string(s.m) + "," + std::to_string(s.k) + "," + std::to_string(s.t) + ")";
          },
          [](const spec::Heisenberg& h) { return "Heis" + std::to_string(h.p); },
          [](const spec::FromTable& f) { return "file:" + f.path; },
          [](const spec::FromPermutations& p) { return perm_list_string(p.generators); },
          [](const spec::DirectProduct& d) {
            const bool nested_right = std::holds_alternative<spec::DirectProduct>(d.right->variant);
            const std::string r = d.right->to_string();
            return d.left->to_string() + "x" + (nested_right ? "(" + r + ")" : r);
          },
      },
      variant);
}

void validate_spec(const GroupSpec& s) {
  std::visit(overloaded{
                 [](const spec::Cyclic& c) {
                   if (c.n == 0) throw InvalidGroup("C<n> needs n >= 1");
                 },
                 [](const spec::Dihedral& d) {
                   if (d.m == 0) throw InvalidGroup("D<m> needs m >= 1");
                 },
                 [](const spec::Quaternion8&) {},
                 [](const spec::Symmetric& g) {
                   if (g.k == 0) throw InvalidGroup("S<k> needs k >= 1");
                 },
                 [](const spec::Alternating& g) {
                   if (g.k == 0) throw InvalidGroup("A<k> needs k >= 1");
                 },
                 [](const spec::SemidirectCyclic& g) {
                   if (g.m == 0 || g.k == 0) throw InvalidGroup("sd(m,k,t) needs m, k >= 1");
                   if (std::gcd(g.t, g.m) != 1 && g.m != 1) {
                     throw InvalidGroup("sd(m,k,t) needs gcd(t, m) = 1");
                   }
                   if (pow_mod(g.t, g.k, g.m) != 1 % g.m) {
                     throw InvalidGroup("sd(m,k,t) needs t^k = 1 (mod m)");
                   }
                 },
                 [](const spec::Heisenberg& h) {
                   if (!is_prime(h.p)) throw InvalidGroup("Heis<p> needs p prime");
                 },
                 [](const spec::FromTable&) {},
                 [](const spec::FromPermutations& p) {
                   if (p.generators.empty()) throw InvalidGroup("perm:[...] needs at least one permutation");
                 },
                 [](const spec::DirectProduct& d) {
                   validate_spec(*d.left);
                   validate_spec(*d.right);
                 },
             },
             s.variant);
}

Group build_group(const GroupSpec& s) {
  validate_spec(s);
  std::string name = s.to_string();
  return std::visit(
      overloaded{
          [&](const spec::Cyclic& c) { return cyclic(c.n, name); },
          [&](const spec::Dihedral& d) { return semidirect(d.m, 2, d.m - 1 == 0 ? 0 : d.m - 1, name); },
          [&](const spec::Quaternion8&) { return quaternion8(name); },
          [&](const spec::Symmetric& g) { return symmetric(g.k, name); },
          [&](const spec::Alternating& g) { return alternating(g.k, name); },
          [&](const spec::SemidirectCyclic& g) { return semidirect(g.m, g.k, g.t, name); },
          [&](const spec::Heisenberg& h) { return heisenberg(h.p, name); },
          [&](const spec::FromTable& f) { return load_group_file(f.path); },
          [&](const spec::FromPermutations& p) { return close_permutations(p.generators, kMaxGroupOrder, name); },
          [&](const spec::DirectProduct& d) { return direct_product(build_group(*d.left), build_group(*d.right), name); },
      },
      s.variant);
}

Group load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidGroup("cannot open group file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGroup("group file '" + path + "': " + e.what());
  }
  try {
    const auto n = doc.at("order").get<std::size_t>();
    const auto rows = doc.at("table").get<std::vector<std::vector<Element>>>();
    if (rows.size() != n) throw InvalidGroup("group file: table has " + std::to_string(rows.size()) + " rows, order is " + std::to_string(n));
    std::vector<Element> flat;
    for (const auto& r : rows) {
      if (r.size() != n) throw InvalidGroup("group file: table must be square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    if (auto v = check_table(n, flat)) throw InvalidGroup("group file: " + v->message);
    std::vector<std::string> names;
    if (doc.contains("elements")) names = doc.at("elements").get<std::vector<std::string>>();
    std::vector<Symbol> symbols;
    std::vector<Element> gens;
    if (doc.contains("generators")) {
      for (const auto& [key, value] : doc.at("generators").items()) {
        symbols.push_back({key, value.get<Element>()});
        gens.push_back(value.get<Element>());
      }
    }
    const std::string name = doc.value("name", "file:" + path);
    return Group(name, n, std::move(flat), std::move(names), std::move(symbols), std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGroup("group file '" + path + "': " + e.what());
  }
}

}  // namespace subsetfactor
