#include "finrel/law.hpp"

#include <cstdint>
#include <sstream>

#include "finrel/errors.hpp"
#include "finrel/family.hpp"
#include "finrel/function.hpp"
#include "finrel/pointfree.hpp"
#include "finrel/relation.hpp"

namespace finrel {

namespace {

std::string show_named(std::initializer_list<std::pair<const char*, std::string>> parts) {
  std::ostringstream os;
  bool sep = false;
  for (const auto& [name, text] : parts) {
    if (sep) os << ", ";
    os << name << " = " << text;
    sep = true;
  }
  return os.str();
}

std::vector<std::vector<Value>> index_lists(bool include_empty) {
  std::vector<std::vector<Value>> out;
  if (include_empty) out.push_back({});
  out.push_back({Value::atom("i")});
  out.push_back({Value::atom("i"), Value::atom("j")});
  return out;
}

Space<Fun> rel_families_space(const std::vector<Value>& index,
                              const std::vector<Space<Rel>>& spaces) {
  Space<Fun> sp;
  sp.count = 1;
  for (const auto& s : spaces) sp.count = detail::checked_mul(sp.count, s.count);
  auto idx = std::make_shared<std::vector<Value>>(index);
  auto sps = std::make_shared<std::vector<Space<Rel>>>(spaces);
  sp.item = [idx, sps](std::uint64_t n) {
    std::vector<std::pair<Value, Value>> entries;
    for (std::size_t k = idx->size(); k-- > 0;) {
      const auto& s = (*sps)[k];
      entries.emplace_back((*idx)[k], Value::set(s.item(n % s.count).as_set()));
      n /= s.count;
    }
    return Fun::from_entries(std::move(entries));
  };
  return sp;
}

// ---- relation laws -------------------------------------------------------

LawReport law_def3_def5(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = triple_space(relations_space(p, p), subsets_space(cfg.pool()),
                            subsets_space(cfg.pool()));
  using T = std::tuple<Rel, VSet, VSet>;
  return run_over<T>(
      "rel.def3-def5-equiv", space, cfg,
      [](const T& t) {
        const auto& [r, x, y] = t;
        return is_relation_from(r, x, y) == is_relation_from_product(r, x, y);
      },
      [](const T& t) {
        const auto& [r, x, y] = t;
        return show_named({{"R", to_string(r)}, {"X", to_string(x)}, {"Y", to_string(y)}});
      });
}

LawReport law_compose_assoc(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto rels = relations_space(p, p);
  auto space = triple_space(rels, rels, rels);
  using T = std::tuple<Rel, Rel, Rel>;
  return run_over<T>(
      "rel.compose-assoc", space, cfg,
      [](const T& t) {
        const auto& [a, b, c] = t;
        return compose(a, compose(b, c)) == compose(compose(a, b), c);
      },
      [](const T& t) {
        const auto& [a, b, c] = t;
        return show_named({{"T", to_string(a)}, {"S", to_string(b)}, {"R", to_string(c)}});
      });
}

LawReport law_converse_involution(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = relations_space(p, p);
  return run_over<Rel>(
      "rel.converse-involution", space, cfg,
      [](const Rel& r) { return converse(converse(r)) == r; },
      [](const Rel& r) { return show_named({{"R", to_string(r)}}); });
}

LawReport law_converse_antidistributes(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = pair_space(relations_space(p, p), relations_space(p, p));
  using T = std::pair<Rel, Rel>;
  return run_over<T>(
      "rel.converse-antidistributes", space, cfg,
      [](const T& t) {
        const auto& [s, r] = t;
        return converse(compose(s, r)) == compose(converse(r), converse(s));
      },
      [](const T& t) {
        return show_named({{"S", to_string(t.first)}, {"R", to_string(t.second)}});
      });
}

LawReport law_functional_pointfree(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = relations_space(p, p);
  return run_over<Rel>(
      "rel.functional-pointfree", space, cfg,
      [](const Rel& r) {
        return is_functional(r) == (compose(r, converse(r)) == identity(ran(r)));
      },
      [](const Rel& r) { return show_named({{"R", to_string(r)}}); });
}

// Deliberately false claim: a nonempty relation that runs into Y and into a
// strictly larger Y' would force Y = Y'. Its guaranteed counterexample is the
// evidence that "the" target carrier of a relation is ill-defined.
LawReport law_codomain_not_attribute(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = triple_space(relations_space(p, p), subsets_space(cfg.pool()),
                            subsets_space(cfg.pool()));
  using T = std::tuple<Rel, VSet, VSet>;
  return run_over<T>(
      "rel.codomain-not-attribute", space, cfg,
      [](const T& t) {
        const auto& [r, y, yp] = t;
        const bool both = !r.empty() && is_relation_from(r, dom(r), y) &&
                          is_relation_from(r, dom(r), yp) && y.subset_of(yp);
        return !(both && y != yp);
      },
      [](const T& t) {
        const auto& [r, y, yp] = t;
        return show_named({{"R", to_string(r)}, {"Y", to_string(y)}, {"Y'", to_string(yp)}});
      });
}

// ---- function laws -------------------------------------------------------

LawReport law_fun_equality(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = pair_space(partial_functions_space(p, p), partial_functions_space(p, p));
  using T = std::pair<Fun, Fun>;
  return run_over<T>(
      "fun.equality-thm", space, cfg,
      [](const T& t) {
        const auto& [f, g] = t;
        bool pointwise = f.domain() == g.domain();
        if (pointwise)
          for (const auto& [x, fx] : f.entries())
            if (fx != g.at(x)) {
              pointwise = false;
              break;
            }
        return (f == g) == pointwise;
      },
      [](const T& t) {
        return show_named({{"f", to_string(t.first)}, {"g", to_string(t.second)}});
      });
}

LawReport law_compose_graph_agree(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = pair_space(partial_functions_space(p, p), partial_functions_space(p, p));
  using T = std::pair<Fun, Fun>;
  return run_over<T>(
      "fun.compose-graph-agree", space, cfg,
      [](const T& t) {
        const auto& [g, f] = t;
        return compose_fun(g, f) == fun_from_graph(compose(graph(g), graph(f)));
      },
      [](const T& t) {
        return show_named({{"g", to_string(t.first)}, {"f", to_string(t.second)}});
      });
}

LawReport law_compose_domain(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = pair_space(partial_functions_space(p, p), partial_functions_space(p, p));
  using T = std::pair<Fun, Fun>;
  return run_over<T>(
      "fun.compose-domain", space, cfg,
      [](const T& t) {
        const auto& [g, f] = t;
        std::vector<Value> expected;
        for (const auto& [x, fx] : f.entries())
          if (g.defined_at(fx)) expected.push_back(x);
        return compose_fun(g, f).domain() == VSet(std::move(expected));
      },
      [](const T& t) {
        return show_named({{"g", to_string(t.first)}, {"f", to_string(t.second)}});
      });
}

LawReport law_inverse_iff_injective(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = partial_functions_space(p, p);
  return run_over<Fun>(
      "fun.inverse-iff-injective", space, cfg,
      [](const Fun& f) {
        const bool inj = is_injective(f);
        if (inj != is_functional(converse(graph(f)))) return false;
        try {
          const Fun fi = inverse(f);
          if (!inj) return false;
          return compose_fun(fi, f) == identity_fun(f.domain()) &&
                 compose_fun(f, fi) == identity_fun(f.range());
        } catch (const NotInjective&) {
          return !inj;
        }
      },
      [](const Fun& f) { return show_named({{"f", to_string(f)}}); });
}

LawReport law_proxy_welldef(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  using T = std::pair<Fun, Fun>;
  std::vector<Space<T>> parts;
  auto doms = subsets_space(cfg.pool());
  for (std::uint64_t k = 0; k < doms.count; ++k) {
    const VSet x = doms.item(k);
    parts.push_back(pair_space(functions_space(x, p), functions_space(x, p)));
  }
  auto space = concat_spaces(std::move(parts));
  return run_over<T>(
      "fun.proxy-welldef", space, cfg,
      [](const T& t) {
        const auto& [f, h] = t;
        bool well = true;
        for (const auto& [x1, y1] : f.entries())
          for (const auto& [x2, y2] : f.entries())
            if (y1 == y2 && h.at(x1) != h.at(x2)) well = false;
        try {
          const Fun g = define_by_proxy(f, h);
          if (!well) return false;
          if (g.domain() != f.range()) return false;
          for (const auto& [x, fx] : f.entries())
            if (g.at(fx) != h.at(x)) return false;
          if (is_injective(f) && g != compose_fun(h, inverse(f))) return false;
          return true;
        } catch (const NotWellDefined&) {
          return !well;
        }
      },
      [](const T& t) {
        return show_named({{"f", to_string(t.first)}, {"h", to_string(t.second)}});
      });
}

LawReport law_space_count(const EnumConfig& cfg) {
  auto space = pair_space(subsets_space(cfg.pool()), subsets_space(cfg.pool()));
  using T = std::pair<VSet, VSet>;
  return run_over<T>(
      "fun.space-count", space, cfg,
      [](const T& t) {
        const auto& [x, y] = t;
        std::uint64_t total = 1, partial = 1;
        for (std::size_t k = 0; k < x.size(); ++k) {
          total *= y.size();
          partial *= y.size() + 1;
        }
        return function_space(x, y).size() == total &&
               partial_function_space(x, y).size() == partial &&
               functions_space(x, y).count == total &&
               partial_functions_space(x, y).count == partial;
      },
      [](const T& t) {
        return show_named({{"X", to_string(t.first)}, {"Y", to_string(t.second)}});
      });
}

// ---- family laws ---------------------------------------------------------

Space<Fun> set_family_union(const EnumConfig& cfg, bool include_empty_index,
                            std::size_t min_member_size) {
  std::vector<Space<Fun>> parts;
  for (const auto& idx : index_lists(include_empty_index))
    parts.push_back(set_families_space(idx, cfg.pool(), min_member_size));
  return concat_spaces(std::move(parts));
}

LawReport law_product_universal(const EnumConfig& cfg) {
  auto space = pair_space(set_family_union(cfg, true, 1), subsets_space(cfg.pool()));
  using T = std::pair<Fun, VSet>;
  return run_over<T>(
      "fam.product-universal", space, cfg,
      [&cfg](const T& t) {
        return check_product_universal(t.first, t.second, cfg.eval_cap).passed();
      },
      [](const T& t) {
        return show_named({{"T", to_string(t.first)}, {"S", to_string(t.second)}});
      });
}

LawReport law_sum_universal(const EnumConfig& cfg) {
  auto space = pair_space(set_family_union(cfg, true, 0), subsets_space(cfg.pool()));
  using T = std::pair<Fun, VSet>;
  return run_over<T>(
      "fam.sum-universal", space, cfg,
      [&cfg](const T& t) {
        return check_sum_universal(t.first, t.second, cfg.eval_cap).passed();
      },
      [](const T& t) {
        return show_named({{"T", to_string(t.first)}, {"S", to_string(t.second)}});
      });
}

LawReport law_pr_transpose_id(const EnumConfig& cfg) {
  auto space = set_family_union(cfg, false, 0);
  return run_over<Fun>(
      "fam.pr-transpose-id", space, cfg,
      [](const Fun& t) { return transpose(projections(t)) == identity_fun(product(t)); },
      [](const Fun& t) { return show_named({{"T", to_string(t)}}); });
}

LawReport law_lam_uncurry_id(const EnumConfig& cfg) {
  auto space = set_family_union(cfg, true, 0);
  return run_over<Fun>(
      "fam.lam-uncurry-id", space, cfg,
      [](const Fun& t) {
        return uncurry_family(labelings(t)) == identity_fun(disjoint_union(t));
      },
      [](const Fun& t) { return show_named({{"T", to_string(t)}}); });
}

LawReport law_curry_roundtrip(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = partial_functions_space(cartesian(p, p), p);
  return run_over<Fun>(
      "fam.curry-roundtrip", space, cfg,
      [](const Fun& f) { return uncurry_family(curry(f)) == f; },
      [](const Fun& f) { return show_named({{"f", to_string(f)}}); });
}

LawReport law_uncurry_roundtrip_guard(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  std::vector<Space<Fun>> parts;
  for (const auto& idx : index_lists(true)) {
    std::vector<Space<Fun>> members(idx.size(), partial_functions_space(p, p));
    parts.push_back(fun_families_space(idx, members));
  }
  auto space = concat_spaces(std::move(parts));
  return run_over<Fun>(
      "fam.uncurry-roundtrip-guard", space, cfg,
      [](const Fun& fam) {
        bool no_empty_member = true;
        for (const auto& [i, v] : fam.entries())
          if (v.fun().empty()) no_empty_member = false;
        return (curry(uncurry_family(fam)) == fam) == no_empty_member;
      },
      [](const Fun& fam) { return show_named({{"F", to_string(fam)}}); });
}

LawReport law_alpha_curry(const EnumConfig& cfg) {
  struct Instance {
    VSet x, y, z;
    Fun f;
  };
  std::vector<Space<Instance>> parts;
  auto subsets = subsets_space(cfg.pool());
  for (std::uint64_t a = 0; a < subsets.count; ++a) {
    for (std::uint64_t b = 0; b < subsets.count; ++b) {
      for (std::uint64_t c = 0; c < subsets.count; ++c) {
        const VSet x = subsets.item(a), y = subsets.item(b), z = subsets.item(c);
        Space<Fun> funs = functions_space(cartesian(x, y), z);
        parts.push_back(map_space<Fun, Instance>(
            std::move(funs), [x, y, z](const Fun& f) { return Instance{x, y, z, f}; }));
      }
    }
  }
  auto space = concat_spaces(std::move(parts));
  return run_over<Instance>(
      "fam.alpha-curry", space, cfg,
      [](const Instance& in) {
        const Fun ev = alpha(in.y, in.z);
        const Fun fc = curry(in.f);
        const Fun idy = identity_fun(in.y);
        if (compose_fun(ev, pair_parallel(fc, idy)) != in.f) return false;
        // uniqueness among X -> (Y -> Z), skipping the degenerate corner
        // Y = {} with X nonempty where the factor is not unique
        if (in.y.empty() && !in.x.empty()) return true;
        for (const Value& hv : function_space(in.x, function_space(in.y, in.z))) {
          const Fun& h = hv.fun();
          const bool is_curry = h == fc;
          const bool factors = compose_fun(ev, pair_parallel(h, idy)) == in.f;
          if (is_curry != factors) return false;
        }
        return true;
      },
      [](const Instance& in) {
        return show_named({{"X", to_string(in.x)},
                           {"Y", to_string(in.y)},
                           {"Z", to_string(in.z)},
                           {"f", to_string(in.f)}});
      });
}

// ---- point-free laws -----------------------------------------------------

struct ForkInstance {
  VSet s;
  Fun t;
  Fun rels;
};

Space<ForkInstance> fork_instances(const EnumConfig& cfg) {
  std::vector<Space<ForkInstance>> parts;
  auto subsets = subsets_space(cfg.pool());
  for (std::uint64_t a = 0; a < subsets.count; ++a) {
    const VSet s = subsets.item(a);
    for (const auto& idx : index_lists(false)) {
      auto fams = set_families_space(idx, cfg.pool(), 0);
      for (std::uint64_t b = 0; b < fams.count; ++b) {
        const Fun t = fams.item(b);
        std::vector<Space<Rel>> rel_spaces;
        for (const auto& [i, v] : t.entries())
          rel_spaces.push_back(relations_space(s, v.set_elements()));
        Space<Fun> rels = rel_families_space(idx, rel_spaces);
        parts.push_back(map_space<Fun, ForkInstance>(
            std::move(rels), [s, t](const Fun& r) { return ForkInstance{s, t, r}; }));
      }
    }
  }
  return concat_spaces(std::move(parts));
}

std::string show_fork(const ForkInstance& in) {
  return show_named(
      {{"S", to_string(in.s)}, {"T", to_string(in.t)}, {"R", to_string(in.rels)}});
}

LawReport law_fork_sub(const EnumConfig& cfg) {
  auto space = fork_instances(cfg);
  return run_over<ForkInstance>(
      "pf.fork-sub", space, cfg,
      [](const ForkInstance& in) {
        const Rel f = fork(in.rels, in.t, in.s);
        if (f != fork_pointfree(in.rels, in.t, in.s)) return false;
        const Fun prs = projections(in.t);
        for (const auto& [i, v] : in.rels.entries()) {
          const Rel after = compose(graph(prs.at(i).fun()), f);
          if (!difference_of(after, rel_at(in.rels, i)).empty()) return false;
        }
        return true;
      },
      show_fork);
}

LawReport law_fork_sharp(const EnumConfig& cfg) {
  auto space = fork_instances(cfg);
  return run_over<ForkInstance>(
      "pf.fork-sharp-common-domain", space, cfg,
      [](const ForkInstance& in) {
        const Rel f = fork(in.rels, in.t, in.s);
        const Fun prs = projections(in.t);

        VSet shared = dom(rel_at(in.rels, in.rels.entries().front().first));
        bool common = true;
        VSet first_dom = shared;
        for (const auto& [i, v] : in.rels.entries()) {
          const VSet d = dom(rel_at(in.rels, i));
          shared = intersection_of(shared, d);
          if (d != first_dom) common = false;
        }

        for (const auto& [i, v] : in.rels.entries()) {
          const Rel ri = rel_at(in.rels, i);
          const Rel after = compose(graph(prs.at(i).fun()), f);
          // pointwise sharp form over every source/target candidate
          for (const Value& src : in.s)
            for (const Value& tgt : in.t.at(i).set_elements()) {
              const bool lhs = after.holds(src, tgt);
              const bool rhs = ri.holds(src, tgt) && shared.contains(src);
              if (lhs != rhs) return false;
            }
          if (common && after != ri) return false;
        }
        return true;
      },
      show_fork);
}

struct ParInstance {
  Fun t, t2, rels;
};

LawReport law_par_pointwise(const EnumConfig& cfg) {
  std::vector<Space<ParInstance>> parts;
  for (const auto& idx : index_lists(false)) {
    auto fams = set_families_space(idx, cfg.pool(), 0);
    for (std::uint64_t a = 0; a < fams.count; ++a) {
      const Fun t = fams.item(a);
      for (std::uint64_t b = 0; b < fams.count; ++b) {
        const Fun t2 = fams.item(b);
        std::vector<Space<Rel>> rel_spaces;
        for (const auto& [i, v] : t.entries())
          rel_spaces.push_back(
              relations_space(v.set_elements(), t2.at(i).set_elements()));
        Space<Fun> rels = rel_families_space(idx, rel_spaces);
        parts.push_back(map_space<Fun, ParInstance>(
            std::move(rels), [t, t2](const Fun& r) { return ParInstance{t, t2, r}; }));
      }
    }
  }
  auto space = concat_spaces(std::move(parts));
  return run_over<ParInstance>(
      "pf.par-pointwise", space, cfg,
      [](const ParInstance& in) {
        const Rel direct = par(in.rels, in.t, in.t2);
        if (direct != par_pointfree(in.rels, in.t, in.t2)) return false;
        // componentwise membership, straight from the definition
        for (const Value& a : product(in.t))
          for (const Value& b : product(in.t2)) {
            bool all = true;
            for (const auto& [i, v] : in.rels.entries())
              if (!rel_at(in.rels, i).holds(a.fun().at(i), b.fun().at(i))) {
                all = false;
                break;
              }
            if (direct.holds(a, b) != all) return false;
          }
        return true;
      },
      [](const ParInstance& in) {
        return show_named({{"T", to_string(in.t)},
                           {"T'", to_string(in.t2)},
                           {"R", to_string(in.rels)}});
      });
}

LawReport law_tabulation(const EnumConfig& cfg) {
  const VSet p = VSet(cfg.pool());
  auto space = relations_space(p, p);
  return run_over<Rel>(
      "pf.tabulation", space, cfg,
      [](const Rel& r) {
        const auto [f, g] = tabulate(r);
        if (compose(graph(g), converse(graph(f))) != r) return false;
        const Rel fcf = compose(converse(graph(f)), graph(f));
        const Rel gcg = compose(converse(graph(g)), graph(g));
        return intersection_of(fcf, gcg) == identity(r.as_set());
      },
      [](const Rel& r) { return show_named({{"R", to_string(r)}}); });
}

std::vector<Law> build_catalog() {
  std::vector<Law> laws;
  auto add = [&](const char* id, const char* statement, bool expect_fail,
                 LawReport (*fn)(const EnumConfig&)) {
    laws.push_back(Law{id, statement, expect_fail, fn});
  };

  add("rel.def3-def5-equiv",
      "dom R ⊆ X and ran R ⊆ Y agrees with R ⊆ X×Y for every relation and carrier pair",
      false, law_def3_def5);
  add("rel.compose-assoc", "relation composition is associative", false, law_compose_assoc);
  add("rel.converse-involution", "the converse of the converse is the original relation",
      false, law_converse_involution);
  add("rel.converse-antidistributes", "(S∘R)˘ = R˘∘S˘", false, law_converse_antidistributes);
  add("rel.functional-pointfree", "R is functional iff R∘R˘ is the identity on ran R", false,
      law_functional_pointfree);
  add("rel.codomain-not-attribute",
      "claims a nonempty relation determines a unique target carrier; its guaranteed "
      "counterexample R with ran R ⊆ Y ⊂ Y' shows the claim is false",
      true, law_codomain_not_attribute);

  add("fun.equality-thm", "functions are equal iff they have the same domain and agree on it",
      false, law_fun_equality);
  add("fun.compose-graph-agree",
      "pointwise composition equals composing the graphs and reading the result back", false,
      law_compose_graph_agree);
  add("fun.compose-domain", "dom(g∘f) = {x in dom f | f(x) in dom g}", false,
      law_compose_domain);
  add("fun.inverse-iff-injective",
      "the inverse exists exactly for injective functions and then cancels on both sides",
      false, law_inverse_iff_injective);
  add("fun.proxy-welldef",
      "g(f x) = h x defines g iff f-equal arguments are h-equal; for injective f it equals "
      "h∘f⁻",
      false, law_proxy_welldef);
  add("fun.space-count", "|X→Y| = |Y|^|X| and |X⇸Y| = (|Y|+1)^|X|", false, law_space_count);

  add("fam.product-universal",
      "exactly one map g into the product satisfies f_i = pr_i∘g, namely the transpose",
      false, law_product_universal);
  add("fam.sum-universal",
      "exactly one map g from the disjoint union satisfies f_i = g∘lab_i, namely the "
      "uncurried family",
      false, law_sum_universal);
  add("fam.pr-transpose-id", "the transpose of the projection family is the identity on the "
      "product", false, law_pr_transpose_id);
  add("fam.lam-uncurry-id", "the uncurried labeling family is the identity on the disjoint "
      "union", false, law_lam_uncurry_id);
  add("fam.curry-roundtrip", "uncurrying the curried form restores any pair-domain function",
      false, law_curry_roundtrip);
  add("fam.uncurry-roundtrip-guard",
      "currying the uncurried family restores it exactly when no member is the empty "
      "function",
      false, law_uncurry_roundtrip_guard);
  add("fam.alpha-curry",
      "f factors as evaluation after (curry f ∥ id), uniquely so on nondegenerate carriers",
      false, law_alpha_curry);

  add("pf.fork-sub", "pointwise and point-free fork agree, and pr_i∘fork ⊆ R_i", false,
      law_fork_sub);
  add("pf.fork-sharp-common-domain",
      "pr_i∘fork = R_i under a common domain; in general s relates to y iff R_i does and s "
      "lies in every member's domain",
      false, law_fork_sharp);
  add("pf.par-pointwise",
      "parallel relates tuples componentwise and equals its fork construction", false,
      law_par_pointwise);
  add("pf.tabulation", "R = g∘f˘ and (f˘∘f) ∩ (g˘∘g) is the identity on R's pair set", false,
      law_tabulation);

  return laws;
}

}  // namespace

const std::vector<Law>& law_catalog() {
  static const std::vector<Law> catalog = build_catalog();
  return catalog;
}

const Law& find_law(const std::string& id) {
  for (const Law& law : law_catalog())
    if (law.id == id) return law;
  throw UnknownLaw(id);
}

LawReport run_law(const std::string& id, const EnumConfig& cfg) {
  const Law& law = find_law(id);
  try {
    return law.run(cfg);
  } catch (const BudgetExceeded& e) {
    LawReport rep;
    rep.id = id;
    rep.outcome = LawReport::Outcome::BudgetExceeded;
    rep.budget_estimate = e.estimate;
    return rep;
  }
}

std::vector<LawReport> run_suite(const std::vector<std::string>& ids, const EnumConfig& cfg) {
  std::vector<LawReport> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(run_law(id, cfg));
  return out;
}

std::vector<std::string> law_ids() {
  std::vector<std::string> out;
  for (const Law& law : law_catalog()) out.push_back(law.id);
  return out;
}

nlohmann::json report_to_json(const LawReport& rep) {
  nlohmann::json j;
  j["id"] = rep.id;
  j["instances"] = rep.instances_checked;
  j["outcome"] = to_string(rep.outcome);
  if (rep.outcome == LawReport::Outcome::Fail) j["counterexample"] = rep.counterexample;
  if (rep.outcome == LawReport::Outcome::BudgetExceeded)
    j["budget_estimate"] = rep.budget_estimate;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

}  // namespace finrel
