#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gpcat/category.hpp"

namespace testing {

using namespace gpcat;

// Relation given as (coefficient, "b*a") pairs.
using RelSpec = std::vector<std::pair<long, std::string>>;

inline CategoryPtr make_category(const std::vector<std::string>& objects,
                                 const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                                 const std::vector<RelSpec>& relations, Field field = Field::rational(),
                                 std::size_t cutoff = 16) {
  Quiver q;
  q.objects = objects;
  auto index = [&](const std::string& o) {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == o) return i;
    return objects.size();
  };
  for (const auto& [n, s, t] : arrows) q.arrows.push_back({n, index(s), index(t)});
  std::vector<Relation> rels;
  for (const auto& spec : relations) {
    Relation r;
    for (const auto& [c, p] : spec) {
      Path path;
      std::string rest = p;
      std::vector<std::string> names;
      std::size_t pos;
      while ((pos = rest.find('*')) != std::string::npos) {
        names.push_back(rest.substr(0, pos));
        rest = rest.substr(pos + 1);
      }
      names.push_back(rest);
      for (auto it = names.rbegin(); it != names.rend(); ++it)
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
          if (q.arrows[a].name == *it) path.push_back(a);
      r.terms.push_back({field.from_int(c), path});
    }
    rels.push_back(r);
  }
  return Category::build(q, rels, field, cutoff);
}

inline CategoryPtr a2(Field f = Field::rational()) { return make_category({"1", "2"}, {{"a", "1", "2"}}, {}, f); }

inline CategoryPtr a3(Field f = Field::rational()) {
  return make_category({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {}, f);
}

inline CategoryPtr square(Field f = Field::rational()) {
  return make_category({"c1", "c2", "c3", "c4"},
                       {{"mu", "c1", "c2"}, {"beta", "c2", "c4"}, {"alpha", "c1", "c3"}, {"gamma", "c3", "c4"}},
                       {{{1, "beta*mu"}, {-1, "gamma*alpha"}}}, f);
}

inline CategoryPtr loop_x2(Field f = Field::rational()) {
  return make_category({"0"}, {{"x", "0", "0"}}, {{{1, "x*x"}}}, f);
}

// alpha: 1 -> 2, loop beta at 2, beta*beta = beta*alpha = 0.
inline CategoryPtr lambda1(Field f = Field::rational()) {
  return make_category({"1", "2"}, {{"alpha", "1", "2"}, {"beta", "2", "2"}}, {{{1, "beta*beta"}}, {{1, "beta*alpha"}}}, f);
}

// Chain c_n -> ... -> c_0 with consecutive composites zero.
inline CategoryPtr chain(std::size_t n, Field f = Field::rational()) {
  std::vector<std::string> objs;
  for (std::size_t i = 0; i <= n; ++i) objs.push_back("c" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = n; i >= 1; --i) arrows.emplace_back("d" + std::to_string(i), objs[i], objs[i - 1]);
  std::vector<RelSpec> rels;
  for (std::size_t i = n; i >= 2; --i) rels.push_back({{1, "d" + std::to_string(i - 1) + "*d" + std::to_string(i)}});
  return make_category(objs, arrows, rels, f);
}

// Cyclic quiver with n vertices, all composites of two consecutive arrows zero.
inline CategoryPtr cyclic(std::size_t n, Field f = Field::rational()) {
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < n; ++i) objs.push_back("c" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < n; ++i) arrows.emplace_back("d" + std::to_string(i), objs[i], objs[(i + n - 1) % n]);
  std::vector<RelSpec> rels;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + n - 1) % n;
    rels.push_back({{1, "d" + std::to_string(j) + "*d" + std::to_string(i)}});
  }
  return make_category(objs, arrows, rels, f);
}

}  // namespace testing

#include "gpcat/representation.hpp"

namespace testing {

inline gpcat::Module module_from_rows(gpcat::CategoryPtr c, std::vector<std::size_t> dims,
                                      const std::vector<std::vector<std::vector<long>>>& arrows) {
  std::vector<gpcat::Matrix> ms;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& ar = c->arrow(a);
    if (arrows[a].empty())
      ms.emplace_back(dims[ar.target], dims[ar.source], c->field());
    else
      ms.push_back(gpcat::Matrix::from_rows(c->field(), arrows[a]));
  }
  return gpcat::Module(c, std::move(dims), std::move(ms));
}

// The module with M_1 = 0, M_2 = Q_2 and v = s over Lambda1 (x) Lambda1^op,
// presented with C = Lambda1 and base Lambda1^op.
inline gpcat::Representation discrepancy_module(gpcat::Field f = gpcat::Field::rational()) {
  auto l1 = lambda1(f);
  auto l2 = gpcat::opposite(*l1);
  auto t = gpcat::tensor_category(*l1, *l2);
  // Total arrows: (alpha,1) (alpha,2) (beta,1) (beta,2) (1,alpha) (1,beta) (2,alpha) (2,beta).
  std::vector<std::size_t> dims{0, 0, 1, 2};
  auto m = module_from_rows(t, dims, {{}, {}, {{0}}, {{0, 0}, {1, 0}}, {}, {}, {{1, 0}}, {{0, 0}, {1, 0}}});
  return gpcat::Representation(l1, l2, t, m);
}

}  // namespace testing
