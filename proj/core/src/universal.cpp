#include "fincat/universal.hpp"

#include <map>

namespace fincat {

UniversalKind parse_universal_kind(std::string_view name) {
  static const std::map<std::string_view, UniversalKind> kinds = {
      {"terminal", UniversalKind::Terminal},       {"initial", UniversalKind::Initial},
      {"product", UniversalKind::Product},         {"sum", UniversalKind::Sum},
      {"equalizer", UniversalKind::Equalizer},     {"coequalizer", UniversalKind::Coequalizer},
      {"exponential", UniversalKind::Exponential}, {"pullback-square", UniversalKind::PullbackSquare},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) throw Error(ErrorCode::UnknownKind, std::string(name));
  return it->second;
}

std::string_view to_string(UniversalKind kind) {
  switch (kind) {
    case UniversalKind::Terminal: return "terminal";
    case UniversalKind::Initial: return "initial";
    case UniversalKind::Product: return "product";
    case UniversalKind::Sum: return "sum";
    case UniversalKind::Equalizer: return "equalizer";
    case UniversalKind::Coequalizer: return "coequalizer";
    case UniversalKind::Exponential: return "exponential";
    case UniversalKind::PullbackSquare: return "pullback-square";
  }
  return "unknown";
}

UniversalCandidate candidate(const ProductCone& p) {
  return {UniversalKind::Product, p.object, {p.first, p.second}, {}, {p.first.cod(), p.second.cod()}};
}
UniversalCandidate candidate(const SumCocone& s) {
  return {UniversalKind::Sum, s.object, {s.left, s.right}, {}, {s.left.dom(), s.right.dom()}};
}
UniversalCandidate candidate(const EqualizerCone& e, const FinFn& f, const FinFn& g) {
  return {UniversalKind::Equalizer, e.object, {e.inclusion}, {f, g}, {}};
}
UniversalCandidate candidate(const CoequalizerCocone& q, const FinFn& f, const FinFn& g) {
  return {UniversalKind::Coequalizer, q.object, {q.quotient}, {f, g}, {}};
}
UniversalCandidate candidate(const ExponentialObject& e) {
  return {UniversalKind::Exponential, e.object, {e.eval}, {}, {e.base, e.value}};
}
UniversalCandidate candidate(const PullbackCone& p, const FinFn& f, const FinFn& g) {
  return {UniversalKind::PullbackSquare, p.object, {p.first, p.second}, {f, g}, {}};
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

UniversalReport fail(std::string witness) { return {false, std::move(witness), 0}; }

std::string describe(std::size_t x_size, const std::vector<const std::vector<std::size_t>*>& family,
                     std::size_t count) {
  std::string s = "X={0.." + std::to_string(x_size) + "}";
  for (const auto* t : family) s += " " + table_label(*t);
  return s + ": " + std::to_string(count) + " mediating maps";
}

// Counts u: X → P with legs[i]∘u = targets[i] for all i, pointwise.
std::size_t count_into(std::size_t x_size, const std::vector<const FinFn*>& legs,
                       const std::vector<const std::vector<std::size_t>*>& targets, std::size_t p_size) {
  std::size_t total = 1;
  for (std::size_t x = 0; x < x_size && total > 0; ++x) {
    std::size_t here = 0;
    for (std::size_t e = 0; e < p_size; ++e) {
      bool ok = true;
      for (std::size_t i = 0; i < legs.size() && ok; ++i) ok = (*legs[i])(e) == (*targets[i])[x];
      if (ok) ++here;
    }
    total *= here;
  }
  return total;
}

// Counts u: S → X with u∘legs[i] = sources[i] for all i, pointwise over S.
std::size_t count_out_of(std::size_t s_size, const std::vector<const FinFn*>& legs,
                         const std::vector<const std::vector<std::size_t>*>& sources, std::size_t x_size) {
  std::vector<std::size_t> forced(s_size, npos);
  for (std::size_t i = 0; i < legs.size(); ++i) {
    for (std::size_t a = 0; a < legs[i]->dom().size(); ++a) {
      auto& slot = forced[(*legs[i])(a)];
      const std::size_t v = (*sources[i])[a];
      if (slot != npos && slot != v) return 0;
      slot = v;
    }
  }
  std::size_t total = 1;
  for (auto v : forced) {
    if (v == npos) total *= x_size;
  }
  return total;
}

bool agree(const FinFn& f, const std::vector<std::size_t>& a, const FinFn& g, const std::vector<std::size_t>& b) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (f(a[x]) != g(b[x])) return false;
  }
  return true;
}

}  // namespace

UniversalReport fs_verify_universal(const UniversalCandidate& c, std::size_t bound) {
  UniversalReport rep;
  const std::size_t p = c.object.size();
  auto need = [&](std::size_t maps, std::size_t inputs, std::size_t factors) {
    if (c.maps.size() != maps || c.inputs.size() != inputs || c.factors.size() != factors) {
      throw Error(ErrorCode::InvalidInput, "candidate does not carry the data its kind needs");
    }
  };
  switch (c.kind) {
    case UniversalKind::Terminal:
    case UniversalKind::Initial: {
      need(0, 0, 0);
      for (std::size_t k = 0; k <= bound; ++k) {
        const std::size_t count = c.kind == UniversalKind::Terminal ? ipow(p, k) : ipow(k, p);
        ++rep.instances;
        if (count != 1) return fail(describe(k, {}, count));
      }
      return rep;
    }
    case UniversalKind::Product:
    case UniversalKind::PullbackSquare: {
      const bool square = c.kind == UniversalKind::PullbackSquare;
      need(2, square ? 2 : 0, square ? 0 : 2);
      const FinFn& p1 = c.maps[0];
      const FinFn& p2 = c.maps[1];
      const FinSetObj& a = square ? c.inputs[0].dom() : c.factors[0];
      const FinSetObj& b = square ? c.inputs[1].dom() : c.factors[1];
      if (!(p1.dom() == c.object) || !(p2.dom() == c.object) || !(p1.cod() == a) || !(p2.cod() == b)) {
        return fail("structure maps have the wrong type");
      }
      if (square && !(compose(c.inputs[0], p1) == compose(c.inputs[1], p2))) {
        return fail("square does not commute");
      }
      for (std::size_t k = 0; k <= bound; ++k) {
        UniversalReport r = rep;
        bool bad = false;
        for_each_table(k, a.size(), [&](const std::vector<std::size_t>& f) {
          if (bad) return;
          for_each_table(k, b.size(), [&](const std::vector<std::size_t>& g) {
            if (bad) return;
            if (square && !agree(c.inputs[0], f, c.inputs[1], g)) return;
            ++r.instances;
            const std::size_t n = count_into(k, {&p1, &p2}, {&f, &g}, p);
            if (n != 1) {
              r = fail(describe(k, {&f, &g}, n));
              bad = true;
            }
          });
        });
        if (bad) return r;
        rep = r;
      }
      return rep;
    }
    case UniversalKind::Sum: {
      need(2, 0, 2);
      const FinFn& i1 = c.maps[0];
      const FinFn& i2 = c.maps[1];
      if (!(i1.cod() == c.object) || !(i2.cod() == c.object) || !(i1.dom() == c.factors[0]) ||
          !(i2.dom() == c.factors[1])) {
        return fail("structure maps have the wrong type");
      }
      for (std::size_t k = 0; k <= bound; ++k) {
        bool bad = false;
        for_each_table(c.factors[0].size(), k, [&](const std::vector<std::size_t>& f) {
          if (bad) return;
          for_each_table(c.factors[1].size(), k, [&](const std::vector<std::size_t>& g) {
            if (bad) return;
            ++rep.instances;
            const std::size_t n = count_out_of(p, {&i1, &i2}, {&f, &g}, k);
            if (n != 1) {
              rep.pass = false;
              rep.witness = describe(k, {&f, &g}, n);
              bad = true;
            }
          });
        });
        if (bad) return rep;
      }
      return rep;
    }
    case UniversalKind::Equalizer: {
      need(1, 2, 0);
      const FinFn& e = c.maps[0];
      const FinFn& f = c.inputs[0];
      const FinFn& g = c.inputs[1];
      if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw Error(ErrorCode::NotParallel, "equalizer inputs");
      if (!(e.dom() == c.object) || !(e.cod() == f.dom())) return fail("inclusion has the wrong type");
      if (!(compose(f, e) == compose(g, e))) return fail("inclusion does not equalize the pair");
      for (std::size_t k = 0; k <= bound; ++k) {
        bool bad = false;
        for_each_table(k, f.dom().size(), [&](const std::vector<std::size_t>& h) {
          if (bad) return;
          for (std::size_t x = 0; x < k; ++x) {
            if (f(h[x]) != g(h[x])) return;
          }
          ++rep.instances;
          const std::size_t n = count_into(k, {&e}, {&h}, p);
          if (n != 1) {
            rep.pass = false;
            rep.witness = describe(k, {&h}, n);
            bad = true;
          }
        });
        if (bad) return rep;
      }
      return rep;
    }
    case UniversalKind::Coequalizer: {
      need(1, 2, 0);
      const FinFn& q = c.maps[0];
      const FinFn& f = c.inputs[0];
      const FinFn& g = c.inputs[1];
      if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw Error(ErrorCode::NotParallel, "coequalizer inputs");
      if (!(q.cod() == c.object) || !(q.dom() == f.cod())) return fail("quotient has the wrong type");
      if (!(compose(q, f) == compose(q, g))) return fail("quotient does not coequalize the pair");
      for (std::size_t k = 0; k <= bound; ++k) {
        bool bad = false;
        for_each_table(f.cod().size(), k, [&](const std::vector<std::size_t>& h) {
          if (bad) return;
          for (std::size_t x = 0; x < f.dom().size(); ++x) {
            if (h[f(x)] != h[g(x)]) return;
          }
          ++rep.instances;
          const std::size_t n = count_out_of(p, {&q}, {&h}, k);
          if (n != 1) {
            rep.pass = false;
            rep.witness = describe(k, {&h}, n);
            bad = true;
          }
        });
        if (bad) return rep;
      }
      return rep;
    }
    case UniversalKind::Exponential: {
      need(1, 0, 2);
      const FinFn& eval = c.maps[0];
      const FinSetObj& a = c.factors[0];
      const FinSetObj& b = c.factors[1];
      ProductCone ea = fs_product(c.object, a);
      if (!(eval.dom() == ea.object) || !(eval.cod() == b)) return fail("evaluation has the wrong type");
      for (std::size_t k = 0; k <= bound; ++k) {
        bool bad = false;
        for_each_table(k * a.size(), b.size(), [&](const std::vector<std::size_t>& f) {
          if (bad) return;
          ++rep.instances;
          std::size_t total = 1;
          for (std::size_t x = 0; x < k && total > 0; ++x) {
            std::size_t here = 0;
            for (std::size_t e = 0; e < p; ++e) {
              bool ok = true;
              for (std::size_t y = 0; y < a.size() && ok; ++y) ok = eval(ea.index(e, y)) == f[x * a.size() + y];
              if (ok) ++here;
            }
            total *= here;
          }
          if (total != 1) {
            rep.pass = false;
            rep.witness = describe(k, {&f}, total);
            bad = true;
          }
        });
        if (bad) return rep;
      }
      return rep;
    }
  }
  throw Error(ErrorCode::UnknownKind, "unhandled universal kind");
}

UniversalReport verify_slice_exponential(const SliceExponential& s, std::size_t bound) {
  UniversalReport rep;
  const FinSetObj& base = s.projection.cod();
  const FinFn& f = s.source;
  const FinFn& g = s.exponent;
  for (std::size_t k = 0; k <= bound; ++k) {
    FinSetObj z_set = FinSetObj::of_size(k);
    bool bad = false;
    for_each_table(k, base.size(), [&](const std::vector<std::size_t>& zt) {
      if (bad) return;
      FinFn z(z_set, base, zt);
      PullbackCone zy = fs_pullback(z, g);
      // maps h: Z ×_A Y → X over A
      for_each_table(zy.object.size(), f.dom().size(), [&](const std::vector<std::size_t>& h) {
        if (bad) return;
        for (std::size_t i = 0; i < h.size(); ++i) {
          if (f(h[i]) != z(zy.first(i))) return;
        }
        ++rep.instances;
        std::size_t total = 1;
        for (std::size_t zz = 0; zz < k && total > 0; ++zz) {
          std::size_t here = 0;
          for (std::size_t e = 0; e < s.object.size(); ++e) {
            if (s.projection(e) != z(zz)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < zy.object.size() && ok; ++i) {
              if (zy.first(i) != zz) continue;
              std::size_t pair = npos;
              for (std::size_t j = 0; j < s.eval_domain.object.size(); ++j) {
                if (s.eval_domain.first(j) == e && s.eval_domain.second(j) == zy.second(i)) pair = j;
              }
              ok = pair != npos && s.eval(pair) == h[i];
            }
            if (ok) ++here;
          }
          total *= here;
        }
        if (total != 1) {
          rep.pass = false;
          rep.witness = "Z->A " + table_label(zt) + ", h " + table_label(h) + ": " + std::to_string(total) +
                        " mediating maps";
          bad = true;
        }
      });
    });
    if (bad) return rep;
  }
  return rep;
}

}  // namespace fincat
