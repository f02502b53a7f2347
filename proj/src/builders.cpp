#include "georw/builders.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "georw/errors.hpp"
#include "georw/system_io.hpp"

namespace georw {

  using E = FiniteGroup::Element;

  // ---------------------------------------------------------------------------
  // DirectedSystem

  DirectedSystem::DirectedSystem(Alphabet alphabet, std::vector<DirectedRule> rules)
      : _alphabet(std::move(alphabet)), _rules(std::move(rules)) {
    std::vector<Word> lhs;
    for (auto const& r : _rules) {
      if (r.lhs.empty()) {
        throw StructureError("rule with empty left-hand side");
      }
      _alphabet.validate(r.lhs);
      _alphabet.validate(r.rhs);
      lhs.push_back(r.lhs);
    }
    _index = PatternIndex(lhs, _alphabet.size());
  }

  std::vector<DirectedSystem::Redex> DirectedSystem::redexes(Word const& w) const {
    std::vector<Redex> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      std::vector<std::uint32_t> here;
      _index.for_each_match_at(w, pos, [&](std::uint32_t i) { here.push_back(i); });
      std::sort(here.begin(), here.end());
      for (auto i : here) {
        out.push_back({i, pos});
      }
    }
    return out;
  }

  Word DirectedSystem::apply(Word const& w, Redex r) const {
    auto const& rule = _rules.at(r.rule);
    if (!occurs_at(w, rule.lhs, r.position)) {
      throw PreconditionError("rule does not apply here");
    }
    return splice(w, r.position, rule.lhs.size(), rule.rhs);
  }

  bool DirectedSystem::is_irreducible(Word const& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      bool hit = false;
      _index.for_each_match_at(w, pos, [&](std::uint32_t) { hit = true; });
      if (hit) {
        return false;
      }
    }
    return true;
  }

  Word DirectedSystem::normal_form(Word const& w, std::size_t max_steps) const {
    _alphabet.validate(w);
    Word        cur   = w;
    std::size_t start = 0;
    for (std::size_t steps = 0;; ++steps) {
      std::optional<Redex> first;
      for (std::size_t pos = start; pos < cur.size() && !first; ++pos) {
        std::uint32_t best = UINT32_MAX;
        _index.for_each_match_at(cur, pos, [&](std::uint32_t i) { best = std::min(best, i); });
        if (best != UINT32_MAX) {
          first = Redex{best, pos};
        }
      }
      if (!first) {
        return cur;
      }
      if (steps == max_steps) {
        throw ResourceError("normal form: step cap exceeded");
      }
      cur = apply(cur, *first);
      // Everything left of the rewritten factor minus one lhs stays clean.
      start = first->position > _index.max_length() ? first->position - _index.max_length() : 0;
    }
  }

  // ---------------------------------------------------------------------------
  // Graph groups and Coxeter groups

  std::string inverse_name(std::string const& name) {
    if (name.size() == 1 && std::islower(static_cast<unsigned char>(name[0]))) {
      return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))));
    }
    return name + "^-1";
  }

  RewriteSystem build_graph_group(CommutationGraph const& g) {
    Alphabet            alphabet;
    std::vector<Symbol> image;
    for (auto const& v : g.vertices) {
      auto x = alphabet.add(v);
      auto y = alphabet.add(inverse_name(v));
      image.resize(y.id + 1);
      image[x.id] = y;
      image[y.id] = x;
    }
    std::vector<Rule> rules;
    for (auto const& v : g.vertices) {
      auto x = alphabet.at(v);
      rules.push_back(Rule{{x, image[x.id]}, {}});
      rules.push_back(Rule{{image[x.id], x}, {}});
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (auto const& [u, v] : g.edges) {
      if (u == v) {
        throw StructureError("graph has a loop at '" + u + "'");
      }
      auto a = alphabet.find(u);
      auto b = alphabet.find(v);
      if (!a || !b || std::find(g.vertices.begin(), g.vertices.end(), u) == g.vertices.end()
          || std::find(g.vertices.begin(), g.vertices.end(), v) == g.vertices.end()) {
        throw StructureError("edge '" + u + " " + v + "' leaves the vertex set");
      }
      if (!seen.insert(std::minmax(u, v)).second) {
        continue;
      }
      for (auto x : {*a, image[a->id]}) {
        for (auto y : {*b, image[b->id]}) {
          rules.push_back(Rule{{x, y}, {y, x}});
        }
      }
    }
    return RewriteSystem(std::move(alphabet), std::move(rules), InversePairing(std::move(image)));
  }

  CommutationGraph parse_graph(std::string_view text, std::string const& source) {
    CommutationGraph   g;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      if (tokens[0].text == "vertices") {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          g.vertices.emplace_back(tokens[i].text);
        }
      } else if (tokens[0].text == "edge") {
        if (tokens.size() != 3) {
          throw ParseError(source, line_no, tokens[0].column, "expected 'edge <u> <v>'");
        }
        for (std::size_t i = 1; i < 3; ++i) {
          if (std::find(g.vertices.begin(), g.vertices.end(), tokens[i].text)
              == g.vertices.end()) {
            throw ParseError(source, line_no, tokens[i].column,
                             "unknown vertex '" + std::string(tokens[i].text) + "'");
          }
        }
        g.edges.emplace_back(std::string(tokens[1].text), std::string(tokens[2].text));
      } else {
        throw ParseError(source, line_no, tokens[0].column,
                         "unknown directive '" + std::string(tokens[0].text) + "'");
      }
    }
    return g;
  }

  CommutationGraph load_graph(std::string const& path) {
    return parse_graph(read_text_file(path), path);
  }

  RewriteSystem build_tits_system(CoxeterMatrix const& c) {
    std::size_t const n = c.generators.size();
    if (c.m.size() != n) {
      throw StructureError("Coxeter matrix has the wrong size");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (c.m[i].size() != n || c.m[i][i] != 1) {
        throw StructureError("Coxeter matrix needs a diagonal of 1");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (c.m[i][j] != c.m[j][i]) {
          throw StructureError("Coxeter matrix is not symmetric");
        }
        if (i != j && c.m[i][j] == 1) {
          throw StructureError("m = 1 off the diagonal is not supported");
        }
      }
    }
    Alphabet            alphabet(c.generators);
    std::vector<Symbol> image;
    std::vector<Rule>   rules;
    for (std::size_t i = 0; i < n; ++i) {
      auto x = alphabet.symbol(i);
      image.push_back(x);
      rules.push_back(Rule{{x, x}, {}});
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (c.m[i][j] < 2) {
          continue;
        }
        Word u, v;
        for (unsigned k = 0; k < c.m[i][j]; ++k) {
          u.push_back(alphabet.symbol(k % 2 == 0 ? i : j));
          v.push_back(alphabet.symbol(k % 2 == 0 ? j : i));
        }
        rules.push_back(Rule{u, v});
      }
    }
    return RewriteSystem(std::move(alphabet), std::move(rules), InversePairing(std::move(image)));
  }

  CoxeterMatrix parse_coxeter(std::string_view text, std::string const& source) {
    CoxeterMatrix      c;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    auto               index = [&](Token const& t) {
      auto it = std::find(c.generators.begin(), c.generators.end(), t.text);
      if (it == c.generators.end()) {
        throw ParseError(source, line_no, t.column,
                         "unknown generator '" + std::string(t.text) + "'");
      }
      return static_cast<std::size_t>(it - c.generators.begin());
    };
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      if (tokens[0].text == "generators") {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          c.generators.emplace_back(tokens[i].text);
        }
        std::size_t n = c.generators.size();
        c.m.assign(n, std::vector<unsigned>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
          c.m[i][i] = 1;
        }
      } else if (tokens[0].text == "m") {
        if (tokens.size() != 4) {
          throw ParseError(source, line_no, tokens[0].column, "expected 'm <a> <b> <order>'");
        }
        auto     i = index(tokens[1]);
        auto     j = index(tokens[2]);
        unsigned v = 0;
        try {
          v = static_cast<unsigned>(std::stoul(std::string(tokens[3].text)));
        } catch (std::exception const&) {
          throw ParseError(source, line_no, tokens[3].column, "expected a number");
        }
        if (i == j && v != 1) {
          throw ParseError(source, line_no, tokens[3].column, "diagonal entries must be 1");
        }
        c.m[i][j] = c.m[j][i] = v;
      } else {
        throw ParseError(source, line_no, tokens[0].column,
                         "unknown directive '" + std::string(tokens[0].text) + "'");
      }
    }
    return c;
  }

  CoxeterMatrix load_coxeter(std::string const& path) {
    return parse_coxeter(read_text_file(path), path);
  }

  // ---------------------------------------------------------------------------
  // Amalgamated products

  namespace {
    bool contains(std::vector<E> const& v, E x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    }

    // g = h x with h in H (given by its image) and x in the transversal.
    std::pair<E, E> split_right(FiniteGroup const& g, std::vector<E> const& h,
                                std::vector<E> const& reps, E elem) {
      for (auto x : reps) {
        E hh = g.mult(elem, g.inverse(x));
        if (contains(h, hh)) {
          return {hh, x};
        }
      }
      throw StructureError("transversal does not cover '" + g.name(elem) + "'");
    }

    std::string fresh_name(Alphabet const& a, std::string name) {
      while (a.find(name)) {
        name += "'";
      }
      return name;
    }
  }  // namespace

  void validate_amalgam(AmalgamData const& d) {
    validate_embedding(d.h_in_a, d.a);
    validate_embedding(d.h_in_b, d.b);
    if (!(d.h_in_a.sub.table() == d.h_in_b.sub.table())
        || d.h_in_a.sub.identity() != d.h_in_b.sub.identity()) {
      throw StructureError("the two embeddings start from different groups");
    }
  }

  AmalgamLetters amalgam_letters(AmalgamData const& d) {
    validate_amalgam(d);
    AmalgamLetters out;
    out.of_a.resize(d.a.size());
    out.of_b.resize(d.b.size());
    for (E x = 0; x < d.a.size(); ++x) {
      if (x != d.a.identity()) {
        out.of_a[x] = out.alphabet.add(d.a.name(x));
      }
    }
    auto const& hb = d.h_in_b.map;
    for (E y = 0; y < d.b.size(); ++y) {
      auto it = std::find(hb.begin(), hb.end(), y);
      if (it != hb.end()) {
        out.of_b[y] = out.of_a[d.h_in_a.map[it - hb.begin()]];
      } else {
        out.of_b[y] = out.alphabet.add(fresh_name(out.alphabet, d.b.name(y)));
      }
    }
    return out;
  }

  namespace {
    std::vector<DirectedSystem::DirectedRule> amalgam_rules(AmalgamData const& d,
                                                            AmalgamLetters const& l) {
      std::vector<DirectedSystem::DirectedRule> rules;
      auto letter = [](std::optional<Symbol> s) { return s ? Word{*s} : Word{}; };
      for (E x = 0; x < d.a.size(); ++x) {
        for (E y = 0; y < d.a.size(); ++y) {
          if (x != d.a.identity() && y != d.a.identity()) {
            rules.push_back({{*l.of_a[x], *l.of_a[y]}, letter(l.of_a[d.a.mult(x, y)])});
          }
        }
      }
      for (E x = 0; x < d.b.size(); ++x) {
        for (E y = 0; y < d.b.size(); ++y) {
          if (x != d.b.identity() && y != d.b.identity()) {
            DirectedSystem::DirectedRule r{{*l.of_b[x], *l.of_b[y]},
                                           letter(l.of_b[d.b.mult(x, y)])};
            if (std::find(rules.begin(), rules.end(), r) == rules.end()) {
              rules.push_back(std::move(r));
            }
          }
        }
      }
      auto const ha = d.h_in_a.map;
      auto const hb = d.h_in_b.map;
      auto const xs = transversal(d.a, d.h_in_a, CosetSide::Right);
      auto const ys = transversal(d.b, d.h_in_b, CosetSide::Right);
      // ab -> [ah] y where b = h y.
      for (E a = 0; a < d.a.size(); ++a) {
        if (contains(ha, a)) {
          continue;
        }
        for (E b = 0; b < d.b.size(); ++b) {
          if (contains(hb, b)) {
            continue;
          }
          auto [h, y] = split_right(d.b, hb, ys, b);
          if (h == d.b.identity()) {
            continue;
          }
          E h_in_a = ha[std::find(hb.begin(), hb.end(), h) - hb.begin()];
          rules.push_back({{*l.of_a[a], *l.of_b[b]}, {*l.of_a[d.a.mult(a, h_in_a)], *l.of_b[y]}});
        }
      }
      // ba -> [bh] x where a = h x.
      for (E b = 0; b < d.b.size(); ++b) {
        if (contains(hb, b)) {
          continue;
        }
        for (E a = 0; a < d.a.size(); ++a) {
          if (contains(ha, a)) {
            continue;
          }
          auto [h, x] = split_right(d.a, ha, xs, a);
          if (h == d.a.identity()) {
            continue;
          }
          E h_in_b = hb[std::find(ha.begin(), ha.end(), h) - ha.begin()];
          rules.push_back({{*l.of_b[b], *l.of_a[a]}, {*l.of_b[d.b.mult(b, h_in_b)], *l.of_a[x]}});
        }
      }
      return rules;
    }

    InversePairing amalgam_pairing(AmalgamData const& d, AmalgamLetters const& l) {
      std::vector<Symbol> image(l.alphabet.size());
      for (E x = 0; x < d.a.size(); ++x) {
        if (l.of_a[x]) {
          image[l.of_a[x]->id] = *l.of_a[d.a.inverse(x)];
        }
      }
      for (E y = 0; y < d.b.size(); ++y) {
        if (l.of_b[y]) {
          image[l.of_b[y]->id] = *l.of_b[d.b.inverse(y)];
        }
      }
      return InversePairing(std::move(image));
    }
  }  // namespace

  RewriteSystem build_amalgam_system(AmalgamData const& d) {
    auto         l = amalgam_letters(d);
    Presentation p;
    p.alphabet = l.alphabet;
    for (auto& r : amalgam_rules(d, l)) {
      p.relations.push_back(Relation{std::move(r.lhs), std::move(r.rhs), false});
    }
    p.inverse = amalgam_pairing(d, l);
    return thue_resolution(p);
  }

  DirectedSystem build_amalgam_directed(AmalgamData const& d) {
    auto l = amalgam_letters(d);
    return DirectedSystem(l.alphabet, amalgam_rules(d, l));
  }

  Pregroup build_amalgam_pregroup(AmalgamData const& d) {
    auto l = amalgam_letters(d);
    // Element = letter id shifted past eps, which sits at the identity of A.
    E const eps = d.a.identity();
    auto    elem = [&](std::optional<Symbol> s) -> E {
      if (!s) {
        return eps;
      }
      return s->id < eps ? s->id : s->id + 1;
    };
    std::vector<std::string> names(l.alphabet.size() + 1);
    names[eps] = d.a.name(eps);
    for (std::size_t i = 0; i < l.alphabet.size(); ++i) {
      names[elem(l.alphabet.symbol(i))] = l.alphabet.names()[i];
    }
    if (l.alphabet.find(names[eps])) {
      throw StructureError("identity name clashes with a letter");
    }
    std::vector<E>                 inv(names.size());
    std::vector<Pregroup::Product> products;
    for (E x = 0; x < d.a.size(); ++x) {
      inv[elem(l.of_a[x])] = elem(l.of_a[d.a.inverse(x)]);
      for (E y = 0; y < d.a.size(); ++y) {
        products.emplace_back(elem(l.of_a[x]), elem(l.of_a[y]), elem(l.of_a[d.a.mult(x, y)]));
      }
    }
    for (E x = 0; x < d.b.size(); ++x) {
      inv[elem(l.of_b[x])] = elem(l.of_b[d.b.inverse(x)]);
      for (E y = 0; y < d.b.size(); ++y) {
        products.emplace_back(elem(l.of_b[x]), elem(l.of_b[y]), elem(l.of_b[d.b.mult(x, y)]));
      }
    }
    Pregroup p(std::move(names), eps, std::move(inv), products, true);
    auto     report = check_axioms(p);
    if (!report.all_hold()) {
      throw AxiomError(report, "amalgam pregroup: " + report.describe(p));
    }
    return p;
  }

  // ---------------------------------------------------------------------------
  // HNN-extensions

  void validate_hnn(HnnData const& d) {
    validate_embedding(d.a, d.g);
    validate_embedding(d.b, d.g);
    auto const& sa = d.a.sub;
    auto const& sb = d.b.sub;
    if (d.phi.size() != sa.size() || sa.size() != sb.size()) {
      throw StructureError("phi must be a bijection A -> B");
    }
    std::set<E> hit;
    for (auto y : d.phi) {
      if (y >= sb.size() || !hit.insert(y).second) {
        throw StructureError("phi is not a bijection");
      }
    }
    for (E x = 0; x < sa.size(); ++x) {
      for (E y = 0; y < sa.size(); ++y) {
        if (d.phi[sa.mult(x, y)] != sb.mult(d.phi[x], d.phi[y])) {
          throw StructureError("phi is not a homomorphism at (" + sa.name(x) + ", " + sa.name(y)
                               + ")");
        }
      }
    }
  }

  HnnLetters hnn_letters(HnnData const& d) {
    validate_hnn(d);
    HnnLetters out;
    out.of_g.resize(d.g.size());
    for (E x = 0; x < d.g.size(); ++x) {
      if (x != d.g.identity()) {
        out.of_g[x] = out.alphabet.add(d.g.name(x));
      }
    }
    out.t     = out.alphabet.add(fresh_name(out.alphabet, "t"));
    out.t_inv = out.alphabet.add(fresh_name(out.alphabet, "T"));
    return out;
  }

  std::vector<E> hnn_x(HnnData const& d) {
    return transversal(d.g, d.a, CosetSide::Right);
  }

  std::vector<E> hnn_y(HnnData const& d) {
    return transversal(d.g, d.b, CosetSide::Right);
  }

  namespace {
    // Elements of G: phi and its inverse between the images of A and B.
    struct HnnMaps {
      std::vector<E> a, b;           // images in G
      std::vector<E> phi, phi_inv;   // indexed by G elements; UINT32_MAX outside
      std::vector<E> x, y;
    };

    HnnMaps hnn_maps(HnnData const& d) {
      HnnMaps m;
      m.a = d.a.map;
      m.b = d.b.map;
      m.phi.assign(d.g.size(), UINT32_MAX);
      m.phi_inv.assign(d.g.size(), UINT32_MAX);
      for (E k = 0; k < d.phi.size(); ++k) {
        E from         = d.a.map[k];
        E to           = d.b.map[d.phi[k]];
        m.phi[from]    = to;
        m.phi_inv[to]  = from;
      }
      m.x = hnn_x(d);
      m.y = hnn_y(d);
      return m;
    }
  }  // namespace

  DirectedSystem build_hnn_system(HnnData const& d) {
    auto        l = hnn_letters(d);
    auto        m = hnn_maps(d);
    auto const& g = d.g;
    E const     one = g.identity();
    auto letter = [&](E x) { return x == one ? Word{} : Word{*l.of_g[x]}; };
    std::vector<DirectedSystem::DirectedRule> rules;
    rules.push_back({{l.t_inv, l.t}, {}});
    rules.push_back({{l.t, l.t_inv}, {}});
    for (E x = 0; x < g.size(); ++x) {
      for (E y = 0; y < g.size(); ++y) {
        if (x != one && y != one) {
          rules.push_back({{*l.of_g[x], *l.of_g[y]}, letter(g.mult(x, y))});
        }
      }
    }
    // t g -> a t y with g = phi(a) y.
    for (E x = 0; x < g.size(); ++x) {
      if (x == one) {
        continue;
      }
      auto [b, y] = split_right(g, m.b, m.y, x);
      if (b != one) {
        Word rhs = letter(m.phi_inv[b]);
        rhs.push_back(l.t);
        auto tail = letter(y);
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        rules.push_back({{l.t, *l.of_g[x]}, rhs});
      }
    }
    // T g -> b T x with g = phi^-1(b) x.
    for (E x = 0; x < g.size(); ++x) {
      if (x == one) {
        continue;
      }
      auto [a, xr] = split_right(g, m.a, m.x, x);
      if (a != one) {
        Word rhs = letter(m.phi[a]);
        rhs.push_back(l.t_inv);
        auto tail = letter(xr);
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        rules.push_back({{l.t_inv, *l.of_g[x]}, rhs});
      }
    }
    return DirectedSystem(l.alphabet, std::move(rules));
  }

  RewriteSystem build_britton_system(HnnData const& d) {
    auto        l   = hnn_letters(d);
    auto        m   = hnn_maps(d);
    auto const& g   = d.g;
    E const     one = g.identity();
    auto letter = [&](E x) { return x == one ? Word{} : Word{*l.of_g[x]}; };
    std::vector<Rule> rules;
    rules.push_back(Rule{{l.t_inv, l.t}, {}});
    rules.push_back(Rule{{l.t, l.t_inv}, {}});
    for (E x = 0; x < g.size(); ++x) {
      for (E y = 0; y < g.size(); ++y) {
        if (x != one && y != one) {
          rules.push_back(Rule{{*l.of_g[x], *l.of_g[y]}, letter(g.mult(x, y))});
        }
      }
    }
    for (auto a : m.a) {
      if (a != one) {
        rules.push_back(Rule{{l.t_inv, *l.of_g[a], l.t}, letter(m.phi[a])});
      }
    }
    for (auto b : m.b) {
      if (b != one) {
        rules.push_back(Rule{{l.t, *l.of_g[b], l.t_inv}, letter(m.phi_inv[b])});
      }
    }
    std::vector<Symbol> image(l.alphabet.size());
    for (E x = 0; x < g.size(); ++x) {
      if (x != one) {
        image[l.of_g[x]->id] = *l.of_g[g.inverse(x)];
      }
    }
    image[l.t.id]     = l.t_inv;
    image[l.t_inv.id] = l.t;
    return RewriteSystem(l.alphabet, std::move(rules), InversePairing(std::move(image)));
  }

  Pregroup build_hnn_pregroup(HnnData const& d) {
    validate_hnn(d);
    auto        m   = hnn_maps(d);
    auto const& g   = d.g;
    E const     n   = static_cast<E>(g.size());
    E const     ny  = static_cast<E>(m.y.size());
    E const     nx  = static_cast<E>(m.x.size());
    auto        yi  = [&](E y) { return static_cast<E>(std::find(m.y.begin(), m.y.end(), y) - m.y.begin()); };
    auto        xi  = [&](E x) { return static_cast<E>(std::find(m.x.begin(), m.x.end(), x) - m.x.begin()); };
    auto        gel = [](E x) { return x; };
    auto        tel = [&](E x, E y) { return n + x * ny + yi(y); };
    auto        Tel = [&](E x, E xr) { return n + n * ny + x * nx + xi(xr); };

    std::vector<std::string> names;
    for (E x = 0; x < n; ++x) {
      names.push_back(g.name(x));
    }
    for (E x = 0; x < n; ++x) {
      for (auto y : m.y) {
        names.push_back(g.name(x) + ".t." + g.name(y));
      }
    }
    for (E x = 0; x < n; ++x) {
      for (auto xr : m.x) {
        names.push_back(g.name(x) + ".T." + g.name(xr));
      }
    }
    std::size_t const size = names.size();

    // Decoded form of every element: kind 0 = g, 1 = g t y, 2 = g T x.
    struct Parts {
      int kind;
      E   head;
      E   tail;
    };
    std::vector<Parts> parts(size);
    for (E x = 0; x < n; ++x) {
      parts[gel(x)] = {0, x, g.identity()};
      for (auto y : m.y) {
        parts[tel(x, y)] = {1, x, y};
      }
      for (auto xr : m.x) {
        parts[Tel(x, xr)] = {2, x, xr};
      }
    }

    std::vector<E> inv(size);
    for (E e = 0; e < size; ++e) {
      auto [kind, h, tl] = parts[e];
      E hi = g.inverse(h);
      if (kind == 0) {
        inv[e] = gel(hi);
      } else if (kind == 1) {
        // (h t y)^-1 = y^-1 T h^-1 = y^-1 phi(a) T x where h^-1 = a x.
        auto [a, xr] = split_right(g, m.a, m.x, hi);
        inv[e]       = Tel(g.mult(g.inverse(tl), m.phi[a]), xr);
      } else {
        // (h T x)^-1 = x^-1 t h^-1 = x^-1 phi^-1(b) t y where h^-1 = b y.
        auto [b, y] = split_right(g, m.b, m.y, hi);
        inv[e]      = tel(g.mult(g.inverse(tl), m.phi_inv[b]), y);
      }
    }

    std::vector<Pregroup::Product> products;
    for (E p = 0; p < size; ++p) {
      for (E q = 0; q < size; ++q) {
        auto [kp, hp, tp] = parts[p];
        auto [kq, hq, tq] = parts[q];
        std::optional<E> r;
        if (kp == 0) {
          E h = g.mult(hp, hq);
          r   = kq == 0 ? gel(h) : kq == 1 ? tel(h, tq) : Tel(h, tq);
        } else if (kq == 0) {
          E inner = g.mult(tp, hq);
          if (kp == 1) {
            auto [b, y] = split_right(g, m.b, m.y, inner);
            r           = tel(g.mult(hp, m.phi_inv[b]), y);
          } else {
            auto [a, xr] = split_right(g, m.a, m.x, inner);
            r            = Tel(g.mult(hp, m.phi[a]), xr);
          }
        } else if (kp == 2 && kq == 1) {
          E inner = g.mult(tp, hq);
          if (m.phi[inner] != UINT32_MAX) {
            r = gel(g.mult(g.mult(hp, m.phi[inner]), tq));
          }
        } else if (kp == 1 && kq == 2) {
          E inner = g.mult(tp, hq);
          if (m.phi_inv[inner] != UINT32_MAX) {
            r = gel(g.mult(g.mult(hp, m.phi_inv[inner]), tq));
          }
        }
        if (r) {
          products.emplace_back(p, q, *r);
        }
      }
    }
    Pregroup out(std::move(names), gel(g.identity()), std::move(inv), products, true);
    auto     report = check_axioms(out);
    if (!report.all_hold()) {
      throw AxiomError(report, "HNN pregroup: " + report.describe(out));
    }
    return out;
  }

}  // namespace georw
