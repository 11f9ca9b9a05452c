#include "wreathlab/wreath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wreathlab {

// --- GMap ---------------------------------------------------------------------

bool GMap::surjective() const {
    std::vector<bool> hit(static_cast<std::size_t>(target.num_points()), false);
    for (int y : map) hit[static_cast<std::size_t>(y)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<std::vector<int>> GMap::fibers() const {
    std::vector<std::vector<int>> f(static_cast<std::size_t>(target.num_points()));
    for (int x = 0; x < static_cast<int>(map.size()); ++x)
        f[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])].push_back(x);
    return f;
}

GMap make_gmap(GroupAction source, GroupAction target, std::vector<int> map, std::string label) {
    if (source.group() != target.group())
        throw DomainError("gmap: source and target must carry actions of the same group");
    if (static_cast<int>(map.size()) != source.num_points())
        throw DomainError("gmap: map size does not match source point count");
    for (int y : map)
        if (y < 0 || y >= target.num_points()) throw DomainError("gmap: image point out of range");
    // Equivariance, exhaustively over points and generators; equivariance for
    // arbitrary elements follows by composing generators.
    for (const Perm& g : source.group()->generators())
        for (int x = 0; x < source.num_points(); ++x) {
            int lhs = map[static_cast<std::size_t>(source.act(x, g))];
            int rhs = target.act(map[static_cast<std::size_t>(x)], g);
            if (lhs != rhs)
                throw DomainError("gmap '" + label + "' is not equivariant at point " +
                                  std::to_string(x));
        }
    return GMap{std::move(source), std::move(target), std::move(map), std::move(label)};
}

// --- WreathGroup ----------------------------------------------------------------

namespace {

void check_right_action(const GroupAction& a, const char* which) {
    const auto& gens = a.group()->generators();
    for (int x = 0; x < a.num_points(); ++x)
        for (const Perm& g : gens)
            for (const Perm& h : gens) {
                if (a.act(x, compose(g, h)) != a.act(a.act(x, g), h))
                    throw ConstructionDefect(std::string("right-action law fails for ") + which);
            }
}

double log2_order(std::uint64_t n) { return std::log2(static_cast<double>(n)); }

}  // namespace

WreathGroup::WreathGroup(GroupAction base, GroupAction top, const Budget& budget, std::string label)
    : base_(std::move(base)), top_(std::move(top)) {
    const GroupPtr& H = base_.group();
    const GroupPtr& G = top_.group();
    const int ny = base_.num_points();
    const int nx = top_.num_points();
    if (ny * nx > budget.degree_cap)
        throw CapExceeded("wreath carrier degree " + std::to_string(ny) + "*" + std::to_string(nx) +
                          " exceeds cap " + std::to_string(budget.degree_cap));

    const double lg = static_cast<double>(nx) * log2_order(H->order()) + log2_order(G->order());
    if (lg > log2_order(budget.element_cap) + 1e-9)
        throw CapExceeded("wreath order 2^" + std::to_string(lg) + " exceeds element cap " +
                          std::to_string(budget.element_cap));
    full_order_ = G->order();
    for (int i = 0; i < nx; ++i) full_order_ *= H->order();

    check_right_action(base_, "base action");
    check_right_action(top_, "top action");

    if (base_.kind() == GroupAction::Kind::regular) {
        base_point_perms_.reserve(H->order());
        for (const Perm& h : H->elements()) {
            std::vector<int> im(static_cast<std::size_t>(ny));
            for (int y = 0; y < ny; ++y) im[static_cast<std::size_t>(y)] = base_.act(y, h);
            base_point_perms_.push_back(Perm::from_images(im));
        }
    }

    // Carrier generators: base generators placed at one representative
    // position per top orbit, plus the lifted top generators.
    std::vector<int> orbit_rep;
    {
        std::vector<bool> seen(static_cast<std::size_t>(nx), false);
        for (int x = 0; x < nx; ++x) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            orbit_rep.push_back(x);
            std::vector<int> stack{x};
            seen[static_cast<std::size_t>(x)] = true;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (const Perm& g : G->generators()) {
                    int nxt = top_.act(cur, g);
                    if (!seen[static_cast<std::size_t>(nxt)]) {
                        seen[static_cast<std::size_t>(nxt)] = true;
                        stack.push_back(nxt);
                    }
                }
            }
        }
    }

    std::vector<Perm> carrier_gens;
    WreathElement w = identity_element();
    for (int rep : orbit_rep)
        for (const Perm& a : H->generators()) {
            w.table.assign(static_cast<std::size_t>(nx), 0);
            w.top = 0;
            w.table[static_cast<std::size_t>(rep)] = H->index_of(a);
            carrier_gens.push_back(encode(w));
        }
    for (const Perm& g : G->generators()) {
        w.table.assign(static_cast<std::size_t>(nx), 0);
        w.top = G->index_of(g);
        carrier_gens.push_back(encode(w));
    }

    if (label.empty()) label = "wr(" + H->label() + "," + G->label() + ")";
    carrier_ = FiniteGroup::generated(ny * nx, std::move(carrier_gens), std::move(label), budget);
    if (carrier_->order() != full_order_)
        throw ConstructionDefect("wreath carrier order " + std::to_string(carrier_->order()) +
                                 " != expected " + std::to_string(full_order_));
}

WreathElement WreathGroup::identity_element() const {
    return WreathElement{std::vector<int>(static_cast<std::size_t>(num_top_points()), 0), 0};
}

Perm WreathGroup::encode(const WreathElement& w) const {
    const int ny = num_base_points();
    const int nx = num_top_points();
    const Perm& g = top_group()->element(w.top);
    std::vector<int> im(static_cast<std::size_t>(ny) * static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) {
        const int xg = top_.act(x, g);
        const int h_idx = w.table[static_cast<std::size_t>(x)];
        const Perm& hp = base_.kind() == GroupAction::Kind::regular
                             ? base_point_perms_[static_cast<std::size_t>(h_idx)]
                             : base_group()->element(h_idx);
        for (int y = 0; y < ny; ++y)
            im[static_cast<std::size_t>(point(y, x))] = point(hp[y], xg);
    }
    return Perm::from_images(im);
}

WreathElement WreathGroup::decode(const Perm& p) const {
    const int ny = num_base_points();
    const int nx = num_top_points();
    if (p.degree() != ny * nx) throw DomainError("decode: degree mismatch");

    std::vector<int> top_im(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) top_im[static_cast<std::size_t>(x)] = p[point(0, x)] / ny;

    int top_idx;
    if (top_.kind() == GroupAction::Kind::regular) {
        top_idx = top_im[0];  // image of the identity position is the element itself
        const Perm& g = top_group()->element(top_idx);
        for (int x = 0; x < nx; ++x)
            if (top_.act(x, g) != top_im[static_cast<std::size_t>(x)])
                throw DomainError("decode: top part is not a top-group action");
    } else {
        top_idx = top_group()->index_of(Perm::from_images(top_im));
        if (top_idx < 0) throw DomainError("decode: top part is not a top-group element");
    }

    WreathElement w;
    w.top = top_idx;
    w.table.resize(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) {
        const int xg = top_im[static_cast<std::size_t>(x)];
        std::vector<int> yim(static_cast<std::size_t>(ny));
        for (int y = 0; y < ny; ++y) {
            int img = p[point(y, x)];
            if (img / ny != xg) throw DomainError("decode: permutation does not respect blocks");
            yim[static_cast<std::size_t>(y)] = img % ny;
        }
        int h_idx;
        if (base_.kind() == GroupAction::Kind::regular) {
            h_idx = yim[0];  // identity position again
            if (!(base_point_perms_[static_cast<std::size_t>(h_idx)] == Perm::from_images(yim)))
                throw DomainError("decode: base block is not a base-group action");
        } else {
            h_idx = base_group()->index_of(Perm::from_images(yim));
            if (h_idx < 0) throw DomainError("decode: base block is not a base-group element");
        }
        w.table[static_cast<std::size_t>(x)] = h_idx;
    }
    return w;
}

WreathElement WreathGroup::multiply(const WreathElement& a, const WreathElement& b) const {
    const int nx = num_top_points();
    const GroupPtr& H = base_group();
    const GroupPtr& G = top_group();
    const Perm& ga = G->element(a.top);
    WreathElement r;
    r.table.resize(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) {
        const int xg = top_.act(x, ga);
        const Perm prod = compose(H->element(a.table[static_cast<std::size_t>(x)]),
                                  H->element(b.table[static_cast<std::size_t>(xg)]));
        const int idx = H->index_of(prod);
        if (idx < 0) throw DomainError("multiply: table entry left the base group");
        r.table[static_cast<std::size_t>(x)] = idx;
    }
    r.top = G->index_of(compose(ga, G->element(b.top)));
    return r;
}

WreathGroup regular_wreath(const GroupPtr& H, const GroupPtr& G, const Budget& budget) {
    return WreathGroup(GroupAction::regular(H), GroupAction::regular(G), budget);
}

WreathGroup permutational_wreath(GroupAction base, GroupAction top, const Budget& budget,
                                 std::string label) {
    return WreathGroup(std::move(base), std::move(top), budget, std::move(label));
}

// --- towers ---------------------------------------------------------------------

std::string TowerSpec::to_string() const {
    std::string s = "wr(";
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) s += ",";
        s += "C" + std::to_string(orders[i]);
    }
    s += bracketing == Bracketing::descending ? ";desc)" : ";asc)";
    return s;
}

double projected_log2_order(const TowerSpec& spec) {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n : spec.orders)
        if (n > 1) ns.push_back(n);
    if (ns.empty()) return 0.0;

    if (spec.bracketing == Bracketing::ascending) {
        double lg = std::log2(static_cast<double>(ns[0]));
        for (std::size_t i = 1; i < ns.size(); ++i)
            lg = static_cast<double>(ns[i]) * lg + std::log2(static_cast<double>(ns[i]));
        return lg;
    }
    double lg = std::log2(static_cast<double>(ns.back()));
    for (std::size_t i = ns.size() - 1; i-- > 0;) {
        if (lg > 40.0) return 1e18;  // inner order already astronomically large
        const double inner_order = std::exp2(lg);
        lg = inner_order * std::log2(static_cast<double>(ns[i])) + lg;
    }
    return lg;
}

namespace {

GroupPtr cyclic_group(std::uint64_t n, const Budget& budget) {
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 0);
    return FiniteGroup::generated(static_cast<int>(n), {Perm::cycle(static_cast<int>(n), pts)},
                                  "C" + std::to_string(n), budget);
}

}  // namespace

Tower build_tower(const TowerSpec& spec, const Budget& budget) {
    const double lg = projected_log2_order(spec);
    if (lg > std::log2(static_cast<double>(budget.element_cap)) + 1e-9)
        throw CapExceeded("tower " + spec.to_string() + " projected order 2^" + std::to_string(lg) +
                          " exceeds element cap " + std::to_string(budget.element_cap));

    std::vector<std::uint64_t> ns;
    for (std::uint64_t n : spec.orders)
        if (n > 1) ns.push_back(n);

    GroupPtr carrier;
    if (ns.empty()) {
        carrier = FiniteGroup::generated(1, {Perm::identity(1)}, "E", budget);
    } else if (spec.bracketing == Bracketing::descending) {
        carrier = cyclic_group(ns.back(), budget);
        for (std::size_t i = ns.size() - 1; i-- > 0;) {
            WreathGroup w(GroupAction::natural(cyclic_group(ns[i], budget)),
                          GroupAction::regular(carrier), budget,
                          i == 0 ? spec.to_string() : "");
            carrier = w.carrier();
        }
    } else {
        carrier = cyclic_group(ns[0], budget);
        for (std::size_t i = 1; i < ns.size(); ++i) {
            WreathGroup w(GroupAction::natural(carrier),
                          GroupAction::regular(cyclic_group(ns[i], budget)), budget,
                          i + 1 == ns.size() ? spec.to_string() : "");
            carrier = w.carrier();
        }
    }

    // The construction generators are exactly the layer generators: each
    // wreath step contributes the new cyclic generator plus lifted copies of
    // the previous ones, and the carrier-order check certifies they generate.
    std::vector<Perm> gens;
    const auto& cgens = carrier->generators();
    std::size_t ci = 0;
    for (int i = 0; i < spec.length(); ++i) {
        if (spec.orders[static_cast<std::size_t>(i)] == 1) {
            gens.push_back(Perm::identity(carrier->degree()));
        } else {
            if (ci >= cgens.size()) throw ConstructionDefect("tower generator bookkeeping failed");
            gens.push_back(cgens[ci++]);
        }
    }
    if (!ns.empty() && ci != cgens.size())
        throw ConstructionDefect("tower generator count mismatch");
    for (int i = 0; i < spec.length(); ++i)
        if (spec.orders[static_cast<std::size_t>(i)] > 1 &&
            gens[static_cast<std::size_t>(i)].order() != spec.orders[static_cast<std::size_t>(i)])
            throw ConstructionDefect("tower generator order mismatch at layer " + std::to_string(i));

    return Tower{spec, std::move(carrier), std::move(gens)};
}

std::vector<Perm> tower_generators(const TowerSpec& spec, const Budget& budget) {
    return build_tower(spec, budget).generators;
}

GroupPtr iterated_regular_wreath(const std::vector<GroupPtr>& factors, Bracketing bracketing,
                                 const Budget& budget) {
    if (factors.empty()) throw DomainError("wr() needs at least one factor");
    if (factors.size() == 1) return factors[0];
    GroupPtr acc;
    if (bracketing == Bracketing::descending) {
        acc = factors.back();
        for (std::size_t i = factors.size() - 1; i-- > 0;)
            acc = WreathGroup(GroupAction::natural(factors[i]), GroupAction::regular(acc), budget)
                      .carrier();
    } else {
        acc = factors[0];
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = WreathGroup(GroupAction::natural(acc), GroupAction::regular(factors[i]), budget)
                      .carrier();
    }
    return acc;
}

}  // namespace wreathlab

