#include "gpcat/category.hpp"

#include <algorithm>
#include <set>

namespace gpcat {

namespace {

constexpr std::size_t kMaxPaths = 2'000'000;

struct PathRecord {
  std::size_t source;
  std::size_t target;
  Path path;
};

bool deglex_less(const Path& a, const Path& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Path concat(const Path& a, const Path& b) {
  Path r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

struct RelationShape {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t min_len = 0;
  std::size_t max_len = 0;
};

// Sparse linear combination of paths, grouped by endpoints.
using Combination = std::map<Path, Scalar>;

class PathTable {
 public:
  PathTable(const Quiver& q) : quiver_(q) {
    std::vector<PathRecord> zero;
    for (std::size_t x = 0; x < q.objects.size(); ++x) zero.push_back({x, x, {}});
    by_length_.push_back(std::move(zero));
  }

  // Extends the table so that lengths 0..len are present.
  void extend_to(std::size_t len) {
    while (by_length_.size() <= len) {
      std::vector<PathRecord> next;
      for (const auto& rec : by_length_.back()) {
        for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
          if (quiver_.arrows[a].source != rec.target) continue;
          PathRecord r{rec.source, quiver_.arrows[a].target, rec.path};
          r.path.push_back(a);
          next.push_back(std::move(r));
        }
      }
      total_ += next.size();
      if (total_ > kMaxPaths) {
        throw Error(ErrorKind::possibly_infinite,
                    "path enumeration exceeded " + std::to_string(kMaxPaths) + " paths at length " +
                        std::to_string(by_length_.size()));
      }
      by_length_.push_back(std::move(next));
    }
  }

  const std::vector<PathRecord>& length(std::size_t len) const { return by_length_[len]; }

 private:
  const Quiver& quiver_;
  std::vector<std::vector<PathRecord>> by_length_;
  std::size_t total_ = 0;
};

// All elements p * r * q of the ideal whose terms have length <= max_len, or
// (truncate = true) the truncations to length < max_len of those whose
// shortest term has length < max_len.
std::vector<std::pair<std::size_t, Combination>> ideal_elements(const Quiver& q, const std::vector<Relation>& rels,
                                                                const std::vector<RelationShape>& shapes,
                                                                const PathTable& paths, std::size_t max_len,
                                                                bool truncate) {
  const std::size_t n = q.objects.size();
  std::vector<std::pair<std::size_t, Combination>> out;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto& sh = shapes[r];
    std::size_t budget_len = truncate ? sh.min_len : sh.max_len;
    if (truncate ? budget_len >= max_len : budget_len > max_len) continue;
    std::size_t room = truncate ? max_len - 1 - budget_len : max_len - budget_len;
    for (std::size_t lp = 0; lp <= room; ++lp) {
      for (std::size_t lq = 0; lp + lq <= room; ++lq) {
        for (const auto& pre : paths.length(lp)) {
          if (pre.target != sh.source) continue;
          for (const auto& suf : paths.length(lq)) {
            if (suf.source != sh.target) continue;
            Combination comb;
            for (const auto& term : rels[r].terms) {
              std::size_t len = lp + term.path.size() + lq;
              if (truncate && len >= max_len) continue;
              Path p = concat(concat(pre.path, term.path), suf.path);
              auto [it, inserted] = comb.emplace(std::move(p), term.coefficient);
              if (!inserted) it->second += term.coefficient;
            }
            std::erase_if(comb, [](const auto& kv) { return kv.second.is_zero(); });
            if (!comb.empty()) out.emplace_back(pre.source * n + suf.target, std::move(comb));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

CategoryPtr Category::build(Quiver quiver, std::vector<Relation> relations, Field field, std::size_t length_cutoff) {
  if (length_cutoff < 1) throw Error(ErrorKind::validation, "length_cutoff must be at least 1");
  const std::size_t n = quiver.objects.size();
  if (n == 0) throw Error(ErrorKind::validation, "category has no objects");
  {
    std::set<std::string> seen;
    for (const auto& o : quiver.objects) {
      if (o.empty()) throw Error(ErrorKind::validation, "empty object identifier");
      if (!seen.insert(o).second) throw Error(ErrorKind::validation, "duplicate object identifier '" + o + "'");
    }
    std::set<std::string> arrows;
    for (const auto& a : quiver.arrows) {
      if (a.name.empty() || a.name.find_first_of("* \t") != std::string::npos) {
        throw Error(ErrorKind::validation, "invalid arrow identifier '" + a.name + "'");
      }
      if (!arrows.insert(a.name).second) throw Error(ErrorKind::validation, "duplicate arrow identifier '" + a.name + "'");
      if (a.source >= n || a.target >= n) throw Error(ErrorKind::validation, "arrow '" + a.name + "' has a missing endpoint");
    }
  }

  std::vector<RelationShape> shapes;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    if (rel.terms.empty()) throw Error(ErrorKind::validation, "relation " + std::to_string(r) + " has no terms");
    RelationShape sh;
    sh.min_len = SIZE_MAX;
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      const auto& term = rel.terms[t];
      if (!(term.coefficient.field() == field)) {
        throw Error(ErrorKind::field_mismatch, "relation coefficient over " + term.coefficient.field().name() +
                                                   " in a category over " + field.name());
      }
      if (term.path.empty()) throw Error(ErrorKind::validation, "relation " + std::to_string(r) + " has an empty path");
      for (std::size_t k = 0; k < term.path.size(); ++k) {
        if (term.path[k] >= quiver.arrows.size()) throw Error(ErrorKind::validation, "relation uses an unknown arrow");
        if (k > 0 && quiver.arrows[term.path[k - 1]].target != quiver.arrows[term.path[k]].source) {
          throw Error(ErrorKind::validation, "relation " + std::to_string(r) + " contains a non-composable path");
        }
      }
      std::size_t s = quiver.arrows[term.path.front()].source;
      std::size_t e = quiver.arrows[term.path.back()].target;
      if (t == 0) {
        sh.source = s;
        sh.target = e;
      } else if (s != sh.source || e != sh.target) {
        throw Error(ErrorKind::validation, "relation terms not parallel in relation " + std::to_string(r));
      }
      sh.min_len = std::min(sh.min_len, term.path.size());
      sh.max_len = std::max(sh.max_len, term.path.size());
    }
    shapes.push_back(sh);
  }

  PathTable paths(quiver);

  // Find the least N such that every path of length N lies in the span of
  // ideal elements p*r*q with all terms of length <= L, for L up to the cutoff.
  std::size_t nilpotency = 0;
  std::pair<std::size_t, std::size_t> witness{0, 0};
  for (std::size_t L = 1; L <= length_cutoff && nilpotency == 0; ++L) {
    paths.extend_to(L);
    auto gens = ideal_elements(quiver, relations, shapes, paths, L, false);
    for (std::size_t N = 1; N <= L && nilpotency == 0; ++N) {
      bool all_in = true;
      for (std::size_t pair = 0; pair < n * n && all_in; ++pair) {
        std::size_t x = pair / n, y = pair % n;
        std::vector<Path> targets;
        for (const auto& rec : paths.length(N))
          if (rec.source == x && rec.target == y) targets.push_back(rec.path);
        if (targets.empty()) continue;
        std::map<Path, std::size_t> index;
        for (std::size_t len = 0; len <= L; ++len)
          for (const auto& rec : paths.length(len))
            if (rec.source == x && rec.target == y) index.emplace(rec.path, index.size());
        std::vector<const Combination*> rows;
        for (const auto& g : gens)
          if (g.first == pair) rows.push_back(&g.second);
        Matrix gm(rows.size(), index.size(), field);
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (const auto& [p, c] : *rows[i]) gm(i, index.at(p)) = c;
        Matrix with_targets(rows.size() + targets.size(), index.size(), field);
        with_targets.set_block(0, 0, gm);
        for (std::size_t t = 0; t < targets.size(); ++t) with_targets(rows.size() + t, index.at(targets[t])) = field.one();
        if (rank(with_targets) != rank(gm)) {
          all_in = false;
          witness = {x, y};
        }
      }
      if (all_in) nilpotency = N;
    }
  }
  if (nilpotency == 0) {
    throw Error(ErrorKind::possibly_infinite,
                "hom dimension still growing at length_cutoff " + std::to_string(length_cutoff) + " between objects '" +
                    quiver.objects[witness.first] + "' and '" + quiver.objects[witness.second] +
                    "' (arrow ideal not shown nilpotent)");
  }

  auto c = std::shared_ptr<Category>(new Category());
  c->field_ = field;
  c->length_cutoff_ = length_cutoff;
  c->nilpotency_ = nilpotency;

  paths.extend_to(nilpotency);
  auto gens = ideal_elements(quiver, relations, shapes, paths, nilpotency, true);
  c->basis_.resize(n * n);
  c->normal_form_.resize(n * n);
  for (std::size_t pair = 0; pair < n * n; ++pair) {
    std::size_t x = pair / n, y = pair % n;
    std::vector<Path> all;
    for (std::size_t len = 0; len < nilpotency; ++len)
      for (const auto& rec : paths.length(len))
        if (rec.source == x && rec.target == y) all.push_back(rec.path);
    // Columns in decreasing order so that pivots land on the largest words.
    std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) { return deglex_less(b, a); });
    std::map<Path, std::size_t> col;
    for (std::size_t i = 0; i < all.size(); ++i) col.emplace(all[i], i);
    std::vector<const Combination*> rows;
    for (const auto& g : gens)
      if (g.first == pair) rows.push_back(&g.second);
    Matrix gm(rows.size(), all.size(), field);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [p, coef] : *rows[i]) gm(i, col.at(p)) = coef;
    Echelon e = reduced_row_echelon(gm);
    std::vector<bool> pivot(all.size(), false);
    for (auto p : e.pivots) pivot[p] = true;
    std::vector<std::size_t> survivors;
    for (std::size_t i = all.size(); i-- > 0;)
      if (!pivot[i]) survivors.push_back(i);
    std::map<std::size_t, std::size_t> survivor_index;
    for (std::size_t k = 0; k < survivors.size(); ++k) {
      survivor_index[survivors[k]] = k;
      c->basis_[pair].push_back(all[survivors[k]]);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      Vector v(survivors.size(), field.zero());
      if (!pivot[i]) {
        v[survivor_index.at(i)] = field.one();
      }
      c->normal_form_[pair].emplace(all[i], std::move(v));
    }
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Vector& v = c->normal_form_[pair].at(all[e.pivots[r]]);
      for (const auto& [j, k] : survivor_index) v[k] = -e.reduced(r, j);
    }
  }

  c->quiver_ = std::move(quiver);
  c->relations_ = std::move(relations);

  c->composition_.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto& table = c->composition_[(x * n + y) * n + z];
        const auto& bxy = c->basis_[x * n + y];
        const auto& byz = c->basis_[y * n + z];
        table.reserve(bxy.size() * byz.size());
        for (const auto& u : bxy)
          for (const auto& v : byz) table.push_back(c->reduce(x, z, concat(u, v)));
      }
  return c;
}

CategoryPtr Category::unit(Field field) { return build(Quiver{{"k"}, {}}, {}, field, 1); }

std::size_t Category::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < quiver_.objects.size(); ++i)
    if (quiver_.objects[i] == name) return i;
  throw Error(ErrorKind::validation, "unknown object '" + name + "'");
}

std::size_t Category::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < quiver_.arrows.size(); ++i)
    if (quiver_.arrows[i].name == name) return i;
  throw Error(ErrorKind::validation, "unknown arrow '" + name + "'");
}

std::size_t Category::total_dim() const {
  std::size_t d = 0;
  for (const auto& b : basis_) d += b.size();
  return d;
}

Vector Category::reduce(std::size_t x, std::size_t y, const Path& path) const {
  const std::size_t n = object_count();
  if (x >= n || y >= n) throw Error(ErrorKind::argument, "reduce: object out of range");
  std::size_t s = x;
  for (auto a : path) {
    if (a >= arrow_count() || quiver_.arrows[a].source != s) throw Error(ErrorKind::argument, "reduce: path is not composable");
    s = quiver_.arrows[a].target;
  }
  if (s != y) throw Error(ErrorKind::argument, "reduce: path does not end at the target object");
  if (path.size() >= nilpotency_) return Vector(hom_dim(x, y), field_.zero());
  return normal_form_[x * n + y].at(path);
}

const Vector& Category::compose(std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j) const {
  const std::size_t n = object_count();
  return composition_[(x * n + y) * n + z][i * hom_dim(y, z) + j];
}

Matrix Category::left_multiplication(std::size_t x, std::size_t y, std::size_t z, const Vector& h) const {
  Matrix m(hom_dim(x, z), hom_dim(x, y), field_);
  for (std::size_t i = 0; i < hom_dim(x, y); ++i)
    for (std::size_t j = 0; j < hom_dim(y, z); ++j) {
      if (h[j].is_zero()) continue;
      const Vector& c = compose(x, y, z, i, j);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) m(k, i) += h[j] * c[k];
    }
  return m;
}

Matrix Category::right_multiplication(std::size_t x, std::size_t y, std::size_t z, const Vector& h) const {
  Matrix m(hom_dim(x, z), hom_dim(y, z), field_);
  for (std::size_t j = 0; j < hom_dim(y, z); ++j)
    for (std::size_t i = 0; i < hom_dim(x, y); ++i) {
      if (h[i].is_zero()) continue;
      const Vector& c = compose(x, y, z, i, j);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) m(k, j) += h[i] * c[k];
    }
  return m;
}

Vector Category::arrow_element(std::size_t a) const {
  const auto& ar = arrow(a);
  return reduce(ar.source, ar.target, Path{a});
}

Vector Category::identity_element(std::size_t x) const { return reduce(x, x, Path{}); }

std::string Category::path_label(std::size_t x, const Path& path) const {
  if (path.empty()) return "e_" + object_name(x);
  std::string s;
  for (std::size_t k = path.size(); k-- > 0;) {
    s += arrow(path[k]).name;
    if (k) s += "*";
  }
  return s;
}

std::string Category::basis_label(std::size_t x, std::size_t y, std::size_t i) const {
  return path_label(x, hom_basis(x, y)[i]);
}

Path Category::parse_path(const std::string& text) const {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    std::size_t star = text.find('*', start);
    std::string token = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) throw Error(ErrorKind::parse, "empty arrow name in path '" + text + "'");
    names.push_back(token);
    if (star == std::string::npos) break;
    start = star + 1;
  }
  Path p;
  for (auto it = names.rbegin(); it != names.rend(); ++it) p.push_back(arrow_index(*it));
  return p;
}

bool Category::check_associativity() const {
  const std::size_t n = object_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      // Units.
      for (std::size_t i = 0; i < hom_dim(x, y); ++i) {
        Vector unit(hom_dim(x, y), field_.zero());
        unit[i] = field_.one();
        if (compose(x, x, y, 0, i) != unit || compose(x, y, y, i, 0) != unit) return false;
      }
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t i = 0; i < hom_dim(x, y); ++i)
            for (std::size_t j = 0; j < hom_dim(y, z); ++j)
              for (std::size_t k = 0; k < hom_dim(z, w); ++k) {
                // k o (j o i) versus (k o j) o i.
                const Vector& ji = compose(x, y, z, i, j);
                const Vector& kj = compose(y, z, w, j, k);
                Vector lhs(hom_dim(x, w), field_.zero()), rhs(hom_dim(x, w), field_.zero());
                for (std::size_t m = 0; m < ji.size(); ++m) {
                  if (ji[m].is_zero()) continue;
                  const Vector& t = compose(x, z, w, m, k);
                  for (std::size_t r = 0; r < t.size(); ++r) lhs[r] += ji[m] * t[r];
                }
                for (std::size_t m = 0; m < kj.size(); ++m) {
                  if (kj[m].is_zero()) continue;
                  const Vector& t = compose(x, y, w, i, m);
                  for (std::size_t r = 0; r < t.size(); ++r) rhs[r] += kj[m] * t[r];
                }
                if (lhs != rhs) return false;
              }
    }
  return true;
}

bool Category::check_relations() const {
  for (const auto& rel : relations_) {
    std::size_t x = arrow(rel.terms.front().path.front()).source;
    std::size_t y = arrow(rel.terms.front().path.back()).target;
    Vector sum(hom_dim(x, y), field_.zero());
    for (const auto& t : rel.terms) {
      Vector v = reduce(x, y, t.path);
      for (std::size_t k = 0; k < v.size(); ++k) sum[k] += t.coefficient * v[k];
    }
    for (const auto& s : sum)
      if (!s.is_zero()) return false;
  }
  return true;
}

bool Category::structurally_equal(const Category& other) const {
  return quiver_ == other.quiver_ && relations_ == other.relations_ && field_ == other.field_ &&
         length_cutoff_ == other.length_cutoff_;
}

CategoryPtr opposite(const Category& c) {
  Quiver q = c.quiver();
  for (auto& a : q.arrows) std::swap(a.source, a.target);
  std::vector<Relation> rels = c.relations();
  for (auto& r : rels)
    for (auto& t : r.terms) std::reverse(t.path.begin(), t.path.end());
  return Category::build(std::move(q), std::move(rels), c.field(), c.length_cutoff());
}

CategoryPtr tensor_category(const Category& c1, const Category& c2) {
  if (!(c1.field() == c2.field())) {
    throw Error(ErrorKind::field_mismatch, "tensor_category: factors over " + c1.field().name() + " and " + c2.field().name());
  }
  const std::size_t n1 = c1.object_count(), n2 = c2.object_count();
  const std::size_t a1 = c1.arrow_count(), a2 = c2.arrow_count();
  Quiver q;
  for (std::size_t c = 0; c < n1; ++c)
    for (std::size_t d = 0; d < n2; ++d) q.objects.push_back("(" + c1.object_name(c) + "," + c2.object_name(d) + ")");
  auto obj = [&](std::size_t c, std::size_t d) { return c * n2 + d; };
  auto left_arrow = [&](std::size_t a, std::size_t d) { return a * n2 + d; };
  auto right_arrow = [&](std::size_t c, std::size_t b) { return a1 * n2 + c * a2 + b; };
  for (std::size_t a = 0; a < a1; ++a)
    for (std::size_t d = 0; d < n2; ++d) {
      const auto& ar = c1.arrow(a);
      q.arrows.push_back({"(" + ar.name + "," + c2.object_name(d) + ")", obj(ar.source, d), obj(ar.target, d)});
    }
  for (std::size_t c = 0; c < n1; ++c)
    for (std::size_t b = 0; b < a2; ++b) {
      const auto& ar = c2.arrow(b);
      q.arrows.push_back({"(" + c1.object_name(c) + "," + ar.name + ")", obj(c, ar.source), obj(c, ar.target)});
    }

  std::vector<Relation> rels;
  for (const auto& r : c1.relations())
    for (std::size_t d = 0; d < n2; ++d) {
      Relation nr;
      for (const auto& t : r.terms) {
        Path p;
        for (auto a : t.path) p.push_back(left_arrow(a, d));
        nr.terms.push_back({t.coefficient, p});
      }
      rels.push_back(std::move(nr));
    }
  for (std::size_t c = 0; c < n1; ++c)
    for (const auto& r : c2.relations()) {
      Relation nr;
      for (const auto& t : r.terms) {
        Path p;
        for (auto b : t.path) p.push_back(right_arrow(c, b));
        nr.terms.push_back({t.coefficient, p});
      }
      rels.push_back(std::move(nr));
    }
  const Field f = c1.field();
  for (std::size_t a = 0; a < a1; ++a)
    for (std::size_t b = 0; b < a2; ++b) {
      const auto& ar = c1.arrow(a);
      const auto& br = c2.arrow(b);
      // (a, d') after (c, b) equals (c', b) after (a, d).
      Relation nr;
      nr.terms.push_back({f.one(), Path{left_arrow(a, br.source), right_arrow(ar.target, b)}});
      nr.terms.push_back({-f.one(), Path{right_arrow(ar.source, b), left_arrow(a, br.target)}});
      rels.push_back(std::move(nr));
    }
  return Category::build(std::move(q), std::move(rels), f, c1.length_cutoff() + c2.length_cutoff() + 1);
}

}  // namespace gpcat
