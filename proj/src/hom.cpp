#include "wreathlab/hom.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace wreathlab {

Perm Homomorphism::image_of(const Perm& x) const {
    if (!verified_) throw DomainError("image_of on an unverified homomorphism");
    const int idx = domain_->index_of(x);
    if (idx < 0) throw DomainError("image_of: element outside the domain");
    Perm acc = Perm::identity(codomain_->degree());
    for (int gi : domain_->word_of(idx)) acc = compose(acc, gen_images_[static_cast<std::size_t>(gi)]);
    return acc;
}

std::vector<Perm> Homomorphism::kernel() const {
    if (!verified_) throw DomainError("kernel of an unverified homomorphism");
    std::vector<Perm> ker;
    const Perm id = Perm::identity(codomain_->degree());
    for (const Perm& x : domain_->elements())
        if (image_of(x) == id) ker.push_back(x);
    return ker;  // sorted: subsequence of the sorted element list
}

Homomorphism verify_homomorphism(GroupPtr domain, GroupPtr codomain, std::vector<Perm> gen_images,
                                 std::string anchor, const Budget& budget) {
    if (gen_images.size() != domain->generators().size())
        throw DomainError("verify_homomorphism: need one image per domain generator");
    for (const Perm& img : gen_images)
        if (!codomain->contains(img))
            throw DomainError("verify_homomorphism: image outside the codomain");

    Homomorphism h;
    h.domain_ = std::move(domain);
    h.codomain_ = std::move(codomain);
    h.gen_images_ = std::move(gen_images);
    h.anchor_ = std::move(anchor);

    // Close the paired generators in the direct product; stop as soon as the
    // graph grows past |domain| (then the pairing is not a map).
    const std::uint64_t dom_order = h.domain_->order();
    const int dd = h.domain_->degree();
    std::vector<Perm> pair_gens;
    for (std::size_t i = 0; i < h.gen_images_.size(); ++i)
        pair_gens.push_back(direct_sum(h.domain_->generators()[i], h.gen_images_[i]));

    const Perm cod_id = Perm::identity(h.codomain_->degree());
    std::vector<Perm> bfs{direct_sum(Perm::identity(dd), cod_id)};
    std::unordered_set<Perm, PermHash> seen{bfs[0]};
    std::uint64_t kernel_count = 0;
    bool overflow = false;
    for (std::size_t i = 0; i < bfs.size() && !overflow; ++i) {
        if ((i & 511u) == 0) budget.token.poll();
        for (const Perm& g : pair_gens) {
            Perm p = compose(bfs[i], g);
            if (seen.insert(p).second) {
                bfs.push_back(std::move(p));
                if (bfs.size() > dom_order) {
                    overflow = true;
                    break;
                }
            }
        }
    }
    if (overflow) {
        h.verified_ = false;
        return h;
    }
    // The graph projects onto the subgroup generated by the domain
    // generators, i.e. all of the domain, so |graph| >= |domain| always;
    // equality certifies the map.
    if (bfs.size() != dom_order)
        throw ConstructionDefect("graph closure smaller than the domain");
    for (const Perm& p : bfs)
        if (block_restrict(p, dd, h.codomain_->degree()) == cod_id) ++kernel_count;

    h.verified_ = true;
    h.kernel_order_ = kernel_count;
    h.surjective_ = (dom_order / kernel_count) == h.codomain_->order();
    return h;
}

Homomorphism certify_construction(GroupPtr domain, GroupPtr codomain, std::vector<Perm> gen_images,
                                  std::string anchor, const Budget& budget) {
    Homomorphism h = verify_homomorphism(std::move(domain), std::move(codomain),
                                         std::move(gen_images), anchor, budget);
    if (!h.verified()) {
        std::string pairs;
        for (std::size_t i = 0; i < h.domain()->generators().size(); ++i)
            pairs += "\n  " + h.domain()->generators()[i].cycle_string() + " -> " +
                     h.gen_images()[i].cycle_string();
        throw ConstructionDefect("construction defect: '" + anchor +
                                 "' failed the graph criterion on the generator pairing:" + pairs);
    }
    return h;
}

Homomorphism compose_homs(const Homomorphism& first, const Homomorphism& second,
                          std::string anchor, const Budget& budget) {
    if (!first.verified() || !second.verified())
        throw DomainError("compose_homs: both maps must be verified");
    if (!same_realization(first.codomain(), second.domain()))
        throw DomainError("compose_homs: codomain of the first map is not the domain of the second");
    std::vector<Perm> images;
    for (const Perm& img : first.gen_images()) images.push_back(second.image_of(img));
    if (anchor.empty()) anchor = first.anchor() + " ; " + second.anchor();
    return verify_homomorphism(first.domain(), second.codomain(), std::move(images),
                               std::move(anchor), budget);
}

Homomorphism identity_hom(const GroupPtr& G, std::string anchor) {
    return verify_homomorphism(G, G, G->generators(),
                               anchor.empty() ? "identity" : std::move(anchor));
}

bool same_realization(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    return a->degree() == b->degree() && a->generators() == b->generators();
}

namespace {

std::map<std::uint64_t, std::uint64_t> census_map(const FiniteGroup& G) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (const Perm& x : G.elements()) ++m[x.order()];
    return m;
}

}  // namespace

std::optional<Homomorphism> is_isomorphic(const GroupPtr& G, const GroupPtr& H,
                                          const Budget& budget) {
    if (G->order() > budget.brute_cap || H->order() > budget.brute_cap)
        throw CapExceeded("is_isomorphic: order exceeds brute cap " +
                          std::to_string(budget.brute_cap));
    if (G->order() != H->order()) return std::nullopt;
    if (census_map(*G) != census_map(*H)) return std::nullopt;
    if (G->is_abelian() != H->is_abelian()) return std::nullopt;
    if (G->is_abelian() && abelian_invariants(*G) != abelian_invariants(*H)) return std::nullopt;

    // Search over image tuples for a small generating set of G, pruning by
    // exact element order (isomorphisms preserve orders).
    std::vector<Perm> gens = small_generating_set(*G);
    GroupPtr Gs = FiniteGroup::from_elements(G->degree(), gens, G->elements(), G->label());

    std::vector<std::vector<const Perm*>> candidates;
    for (const Perm& g : gens) {
        std::vector<const Perm*> c;
        for (const Perm& h : H->elements())
            if (h.order() == g.order()) c.push_back(&h);
        if (c.empty()) return std::nullopt;
        candidates.push_back(std::move(c));
    }

    std::vector<Perm> pick(gens.size(), Perm());
    std::uint64_t tried = 0;
    std::optional<Homomorphism> found;
    auto search = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == gens.size()) {
            ++tried;
            if (tried > budget.tuple_budget)
                throw BudgetExhausted("is_isomorphic: tuple budget exhausted");
            Homomorphism h = verify_homomorphism(Gs, H, pick, "isomorphism-witness", budget);
            if (h.isomorphism()) {
                found = std::move(h);
                return true;
            }
            return false;
        }
        for (const Perm* c : candidates[pos]) {
            budget.token.poll();
            pick[pos] = *c;
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    search(search, 0);
    return found;
}

}  // namespace wreathlab
