#include "qcalc/finite_model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

bool valid_label(const std::string& s) {
  if (s.empty() || s == "u") return false;
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u <= ' ' || u >= 127) return false;
    if (c == '[' || c == ']' || c == ',' || c == ':' || c == '#') return false;
  }
  return true;
}

[[noreturn]] void malformed(const std::string& msg) {
  throw MalformedModelError("malformed model: " + msg);
}

}  // namespace

std::optional<int> FiniteModel::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

void FiniteModel::validate() const {
  if (labels.empty()) malformed("no elements");
  if (n() > kMaxElements)
    malformed("more than " + std::to_string(kMaxElements) + " elements");
  for (const auto& l : labels)
    if (!valid_label(l)) malformed("invalid element label '" + l + "'");
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (labels[i] == labels[j])
        malformed("duplicate element label '" + labels[i] + "'");
  size_t expect = static_cast<size_t>(n()) * n();
  if (add_t.size() != expect) malformed("addition table is not n x n");
  if (mul_t.size() != expect) malformed("multiplication table is not n x n");
  for (const auto* t : {&add_t, &mul_t})
    for (auto e : *t)
      if (e != kUndef && (e < 0 || e >= n()))
        malformed("table entry out of range");
}

namespace {

struct Token {
  std::string text;
  bool special = false;  // one of [ ] , :
};

std::vector<Token> tokenize_model(const std::string& text) {
  std::vector<Token> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, false});
      cur.clear();
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '[' || c == ']' || c == ',' || c == ':') {
      flush();
      out.push_back({std::string(1, c), true});
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

class ModelParser {
 public:
  explicit ModelParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FiniteModel run() {
    FiniteModel m;
    bool have_mode = false, have_elements = false, have_add = false,
         have_mul = false;
    std::vector<std::vector<std::string>> add_rows, mul_rows;
    while (!at_end()) {
      std::string key = expect_word("field name");
      expect_special(":");
      if (key == "mode") {
        if (have_mode) malformed("duplicate field 'mode'");
        have_mode = true;
        std::string v = expect_word("mode value");
        if (v == "paf")
          m.claimed = FiniteModel::Mode::Paf;
        else if (v == "fieldoid")
          m.claimed = FiniteModel::Mode::Fieldoid;
        else if (v == "unconstrained")
          m.claimed = FiniteModel::Mode::Unconstrained;
        else
          malformed("unknown mode '" + v + "'");
      } else if (key == "elements") {
        if (have_elements) malformed("duplicate field 'elements'");
        have_elements = true;
        m.labels = parse_list();
      } else if (key == "add") {
        if (have_add) malformed("duplicate field 'add'");
        have_add = true;
        add_rows = parse_table();
      } else if (key == "mul") {
        if (have_mul) malformed("duplicate field 'mul'");
        have_mul = true;
        mul_rows = parse_table();
      } else {
        malformed("unknown field '" + key + "'");
      }
    }
    if (!have_elements) malformed("missing field 'elements'");
    if (!have_add) malformed("missing field 'add'");
    if (!have_mul) malformed("missing field 'mul'");
    if (m.labels.empty()) malformed("no elements");
    m.add_t = rows_to_table(m, add_rows, "add");
    m.mul_t = rows_to_table(m, mul_rows, "mul");
    m.validate();
    return m;
  }

 private:
  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    if (at_end()) malformed("unexpected end of input");
    return toks_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  std::string expect_word(const std::string& what) {
    Token t = next();
    if (t.special) malformed("expected " + what + ", got '" + t.text + "'");
    return t.text;
  }
  void expect_special(const std::string& s) {
    Token t = next();
    if (!t.special || t.text != s)
      malformed("expected '" + s + "', got '" + t.text + "'");
  }

  std::vector<std::string> parse_list() {
    expect_special("[");
    std::vector<std::string> items;
    while (true) {
      if (peek().special && peek().text == "]") {
        next();
        break;
      }
      items.push_back(expect_word("list entry"));
      if (peek().special && peek().text == ",") {
        next();
        continue;
      }
      expect_special("]");
      break;
    }
    return items;
  }

  std::vector<std::vector<std::string>> parse_table() {
    expect_special("[");
    std::vector<std::vector<std::string>> rows;
    while (true) {
      if (peek().special && peek().text == "]") {
        next();
        break;
      }
      rows.push_back(parse_list());
      if (peek().special && peek().text == ",") {
        next();
        continue;
      }
      expect_special("]");
      break;
    }
    return rows;
  }

  std::vector<std::int16_t> rows_to_table(
      const FiniteModel& m, const std::vector<std::vector<std::string>>& rows,
      const std::string& which) {
    int n = m.n();
    if (static_cast<int>(rows.size()) != n)
      malformed("'" + which + "' has " + std::to_string(rows.size()) +
                " rows for " + std::to_string(n) + " elements");
    std::vector<std::int16_t> t;
    t.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        malformed("'" + which + "' row " + std::to_string(i + 1) + " has " +
                  std::to_string(rows[i].size()) + " entries for " +
                  std::to_string(n) + " elements");
      for (const auto& cell : rows[i]) {
        if (cell == "u") {
          t.push_back(FiniteModel::kUndef);
          continue;
        }
        auto idx = m.index_of(cell);
        if (!idx)
          malformed("unknown element '" + cell + "' in '" + which + "' row " +
                    std::to_string(i + 1));
        t.push_back(static_cast<std::int16_t>(*idx));
      }
    }
    return t;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

FiniteModel FiniteModel::parse(const std::string& text) {
  return ModelParser(tokenize_model(text)).run();
}

FiniteModel FiniteModel::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string FiniteModel::serialize() const {
  std::ostringstream os;
  os << "mode: ";
  switch (claimed) {
    case Mode::Paf:
      os << "paf";
      break;
    case Mode::Fieldoid:
      os << "fieldoid";
      break;
    case Mode::Unconstrained:
      os << "unconstrained";
      break;
  }
  os << "\nelements: [";
  for (int i = 0; i < n(); ++i) os << (i ? ", " : "") << labels[i];
  os << "]\n";
  const std::pair<const std::vector<std::int16_t>*, const char*> tables[] = {
      {&add_t, "add"}, {&mul_t, "mul"}};
  for (const auto& [t, name] : tables) {
    os << name << ": [\n";
    for (int i = 0; i < n(); ++i) {
      os << "  [";
      for (int j = 0; j < n(); ++j)
        os << (j ? ", " : "") << label_or_u((*t)[i * n() + j]);
      os << "],\n";
    }
    os << "]\n";
  }
  return os.str();
}

std::vector<std::int16_t> abelian_group_table(const std::vector<int>& orders) {
  long long size = 1;
  for (int o : orders) {
    if (o < 1) throw Error("cyclic order must be >= 1");
    size *= o;
  }
  if (size > FiniteModel::kMaxElements)
    throw Error("group larger than the 64-element cap");
  int ng = static_cast<int>(size);
  int k = static_cast<int>(orders.size());
  auto decode = [&](int idx) {
    std::vector<int> c(k);
    for (int d = k - 1; d >= 0; --d) {
      c[d] = idx % orders[d];
      idx /= orders[d];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int d = 0; d < k; ++d) idx = idx * orders[d] + c[d];
    return idx;
  };
  std::vector<std::int16_t> table(static_cast<size_t>(ng) * ng);
  for (int i = 0; i < ng; ++i) {
    auto a = decode(i);
    for (int j = 0; j < ng; ++j) {
      auto b = decode(j);
      std::vector<int> s(k);
      for (int d = 0; d < k; ++d) s[d] = (a[d] + b[d]) % orders[d];
      table[i * ng + j] = static_cast<std::int16_t>(encode(s));
    }
  }
  return table;
}

namespace {

std::string group_coord_label(const std::vector<int>& orders, int idx) {
  std::string out;
  std::vector<int> c(orders.size());
  for (int d = static_cast<int>(orders.size()) - 1; d >= 0; --d) {
    c[d] = idx % orders[d];
    idx /= orders[d];
  }
  for (size_t d = 0; d < c.size(); ++d) {
    if (d) out += ".";
    out += std::to_string(c[d]);
  }
  return out;
}

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FiniteModel canonical_model(std::uint32_t p, const std::vector<int>& orders) {
  if (!is_prime_u32(p)) throw Error("canonical_model needs a prime");
  auto g_table = abelian_group_table(orders);
  int ng = 1;
  for (int o : orders) ng *= o;
  long long total = static_cast<long long>(ng) * p;
  if (total > FiniteModel::kMaxElements)
    throw Error("canonical model larger than the 64-element cap");

  bool trivial = ng == 1;
  FiniteModel m;
  m.claimed = FiniteModel::Mode::Paf;
  int n = static_cast<int>(total);
  m.labels.reserve(n);
  for (int d = 0; d < ng; ++d)
    for (std::uint32_t v = 0; v < p; ++v)
      m.labels.push_back(trivial ? std::to_string(v)
                                 : std::to_string(v) + ";" +
                                       group_coord_label(orders, d));
  m.add_t.assign(static_cast<size_t>(n) * n, FiniteModel::kUndef);
  m.mul_t.assign(static_cast<size_t>(n) * n, FiniteModel::kUndef);
  auto index = [&](int d, std::uint32_t v) {
    return d * static_cast<int>(p) + static_cast<int>(v);
  };
  for (int d1 = 0; d1 < ng; ++d1)
    for (std::uint32_t v1 = 0; v1 < p; ++v1)
      for (int d2 = 0; d2 < ng; ++d2)
        for (std::uint32_t v2 = 0; v2 < p; ++v2) {
          int i = index(d1, v1), j = index(d2, v2);
          if (d1 == d2)
            m.add_t[i * n + j] =
                static_cast<std::int16_t>(index(d1, (v1 + v2) % p));
          int dp = g_table[d1 * ng + d2];
          m.mul_t[i * n + j] = static_cast<std::int16_t>(
              index(dp, static_cast<std::uint32_t>(
                            (static_cast<std::uint64_t>(v1) * v2) % p)));
        }
  return m;
}

namespace {

[[noreturn]] void bad_extension(const std::string& msg) {
  throw BadExtensionError("bad extension: " + msg);
}

// Identity of a total finite magma claimed to be a group; -1 if absent.
int group_identity(const std::vector<std::int16_t>& t, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = t[a * n + e] == a;
    if (ok) return e;
  }
  return -1;
}

void require_abelian_group(const std::vector<std::int16_t>& t, int n,
                           const std::string& name) {
  if (static_cast<int>(t.size()) != n * n)
    bad_extension(name + " table is not square");
  for (auto e : t)
    if (e < 0 || e >= n) bad_extension(name + " table entry out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t[a * n + b] != t[b * n + a])
        bad_extension(name + " is not commutative");
      for (int c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
          bad_extension(name + " is not associative");
    }
  int e = group_identity(t, n);
  if (e < 0) bad_extension(name + " has no identity");
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n && !has; ++b) has = t[a * n + b] == e;
    if (!has) bad_extension(name + " has a non-invertible element");
  }
}

FiniteModel build_extension(const ExtensionSpec& spec,
                            const std::vector<int>* reps_in) {
  if (!is_prime_u32(spec.p)) bad_extension("p is not prime");
  int ne = static_cast<int>(spec.e_labels.size());
  if (ne == 0) bad_extension("E is empty");
  require_abelian_group(spec.e_mul, ne, "E");
  int e_one = group_identity(spec.e_mul, ne);

  // embed must be an injective homomorphism F* -> E sending 1 to E's
  // identity.
  if (spec.embed.size() != spec.p - 1)
    bad_extension("embed must cover F* exactly");
  std::vector<int> emb(spec.p);  // F* value -> E index
  std::vector<bool> in_kernel(ne, false);
  for (std::uint32_t v = 1; v < spec.p; ++v) {
    auto it = spec.embed.find(v);
    if (it == spec.embed.end()) bad_extension("embed misses a value of F*");
    if (it->second < 0 || it->second >= ne)
      bad_extension("embed target out of range");
    emb[v] = it->second;
    if (in_kernel[it->second]) bad_extension("embed is not injective");
    in_kernel[it->second] = true;
  }
  if (emb[1] != e_one) bad_extension("embed must send 1 to E's identity");
  for (std::uint32_t a = 1; a < spec.p; ++a)
    for (std::uint32_t b = 1; b < spec.p; ++b) {
      std::uint32_t ab = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(a) * b) % spec.p);
      if (spec.e_mul[emb[a] * ne + emb[b]] != emb[ab])
        bad_extension("embed is not a homomorphism");
    }

  // proj must be a class map with contiguous ids whose induced product is
  // well defined and whose kernel class is exactly embed(F*).
  if (static_cast<int>(spec.proj.size()) != ne)
    bad_extension("proj must map every element of E");
  int g = 0;
  for (int c : spec.proj) {
    if (c < 0) bad_extension("negative class id");
    g = std::max(g, c + 1);
  }
  std::vector<bool> seen(g, false);
  for (int c : spec.proj) seen[c] = true;
  for (int c = 0; c < g; ++c)
    if (!seen[c]) bad_extension("class ids are not contiguous");
  if (ne != static_cast<int>(spec.p - 1) * g)
    bad_extension("|E| must equal |F*| * |G|");
  std::vector<int> g_table(static_cast<size_t>(g) * g, -1);
  for (int x = 0; x < ne; ++x)
    for (int y = 0; y < ne; ++y) {
      int cx = spec.proj[x], cy = spec.proj[y];
      int cz = spec.proj[spec.e_mul[x * ne + y]];
      int& slot = g_table[cx * g + cy];
      if (slot == -1)
        slot = cz;
      else if (slot != cz)
        bad_extension("proj does not induce a quotient product");
    }
  int zero_class = spec.proj[e_one];
  for (int x = 0; x < ne; ++x)
    if ((spec.proj[x] == zero_class) != in_kernel[x])
      bad_extension("kernel of proj differs from embed(F*)");
  if (spec.zero_labels.size() != static_cast<size_t>(g))
    bad_extension("need exactly one zero label per class");

  // Fiber representatives: least index by default, caller's otherwise.
  std::vector<int> reps(g, -1);
  if (reps_in) {
    if (static_cast<int>(reps_in->size()) != g)
      bad_extension("need exactly one representative per class");
    for (int c = 0; c < g; ++c) {
      int r = (*reps_in)[c];
      if (r < 0 || r >= ne || spec.proj[r] != c)
        bad_extension("representative outside its fiber");
      reps[c] = r;
    }
  } else {
    for (int x = 0; x < ne; ++x)
      if (reps[spec.proj[x]] == -1) reps[spec.proj[x]] = x;
  }

  // F*-coordinate of x within its fiber: x = embed(v) * rep.
  std::vector<int> e_inv(ne);
  for (int x = 0; x < ne; ++x)
    for (int y = 0; y < ne; ++y)
      if (spec.e_mul[x * ne + y] == e_one) e_inv[x] = y;
  std::vector<std::uint32_t> val_of_kernel(ne, 0);
  for (std::uint32_t v = 1; v < spec.p; ++v) val_of_kernel[emb[v]] = v;
  auto fiber_value = [&](int x) {
    int k = spec.e_mul[x * ne + e_inv[reps[spec.proj[x]]]];
    return val_of_kernel[k];
  };

  int n = ne + g;
  if (n > FiniteModel::kMaxElements)
    bad_extension("model larger than the 64-element cap");
  FiniteModel m;
  m.claimed = FiniteModel::Mode::Paf;
  m.labels = spec.e_labels;
  for (const auto& zl : spec.zero_labels) m.labels.push_back(zl);
  m.add_t.assign(static_cast<size_t>(n) * n, FiniteModel::kUndef);
  m.mul_t.assign(static_cast<size_t>(n) * n, FiniteModel::kUndef);
  auto zero_of_class = [&](int c) { return ne + c; };
  auto cls = [&](int i) { return i < ne ? spec.proj[i] : i - ne; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ci = cls(i), cj = cls(j);
      // Multiplication: total. Zeros absorb through the class product.
      if (i < ne && j < ne)
        m.mul_t[i * n + j] = spec.e_mul[i * ne + j];
      else
        m.mul_t[i * n + j] =
            static_cast<std::int16_t>(zero_of_class(g_table[ci * g + cj]));
      // Addition: defined within a fiber (plus its zero), undefined across.
      if (ci != cj) continue;
      if (i >= ne && j >= ne) {
        m.add_t[i * n + j] = static_cast<std::int16_t>(i);
      } else if (i >= ne) {
        m.add_t[i * n + j] = static_cast<std::int16_t>(j);
      } else if (j >= ne) {
        m.add_t[i * n + j] = static_cast<std::int16_t>(i);
      } else {
        std::uint32_t s = (fiber_value(i) + fiber_value(j)) % spec.p;
        if (s == 0)
          m.add_t[i * n + j] = static_cast<std::int16_t>(zero_of_class(ci));
        else
          m.add_t[i * n + j] = spec.e_mul[emb[s] * ne + reps[ci]];
      }
    }
  return m;
}

}  // namespace

FiniteModel model_from_extension(const ExtensionSpec& spec) {
  return build_extension(spec, nullptr);
}

FiniteModel model_from_extension_with_reps(const ExtensionSpec& spec,
                                           const std::vector<int>& reps) {
  return build_extension(spec, &reps);
}

FiniteModel disjoint_union(const std::vector<FiniteModel>& parts) {
  if (parts.empty()) throw Error("disjoint union of no parts");
  int n = 0;
  for (const auto& p : parts) {
    p.validate();
    n += p.n();
  }
  if (n > FiniteModel::kMaxElements)
    throw MalformedModelError(
        "malformed model: disjoint union exceeds the 64-element cap");
  FiniteModel m;
  m.claimed = FiniteModel::Mode::Fieldoid;
  m.add_t.assign(static_cast<size_t>(n) * n, FiniteModel::kUndef);
  m.mul_t.assign(static_cast<size_t>(n) * n, FiniteModel::kUndef);
  int base = 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    std::string prefix = std::to_string(k + 1) + "_";
    for (const auto& l : p.labels) m.labels.push_back(prefix + l);
    for (int i = 0; i < p.n(); ++i)
      for (int j = 0; j < p.n(); ++j) {
        int a = p.add_t[i * p.n() + j], u = p.mul_t[i * p.n() + j];
        m.add_t[(base + i) * n + (base + j)] = static_cast<std::int16_t>(
            a == FiniteModel::kUndef ? FiniteModel::kUndef : base + a);
        m.mul_t[(base + i) * n + (base + j)] = static_cast<std::int16_t>(
            u == FiniteModel::kUndef ? FiniteModel::kUndef : base + u);
      }
    base += p.n();
  }
  return m;
}

}  // namespace qcalc
