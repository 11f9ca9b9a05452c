#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/budget.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

/// A homomorphism given by generator images, certified by the graph
/// criterion: the pairing extends to a homomorphism iff the subgroup of
/// domain x codomain generated by the paired generators has order exactly
/// |domain|. Verification also measures the kernel, so the surjectivity flag
/// and kernel order come for free.
///
/// Images of arbitrary elements are evaluated by factoring the element into
/// a generator word (the domain keeps a word tree), so no full image table
/// is ever materialized.
class Homomorphism {
public:
    Homomorphism() = default;

    const GroupPtr& domain() const { return domain_; }
    const GroupPtr& codomain() const { return codomain_; }
    const std::vector<Perm>& gen_images() const { return gen_images_; }
    const std::string& anchor() const { return anchor_; }

    bool verified() const { return verified_; }
    bool surjective() const { return surjective_; }
    std::uint64_t kernel_order() const { return kernel_order_; }
    std::uint64_t image_order() const { return verified_ ? domain_->order() / kernel_order_ : 0; }
    bool injective() const { return verified_ && kernel_order_ == 1; }
    bool isomorphism() const {
        return verified_ && surjective_ && kernel_order_ == 1;
    }

    /// Image of an arbitrary domain element (requires verified()).
    Perm image_of(const Perm& x) const;

    /// The kernel as a sorted element set (walks the whole domain).
    std::vector<Perm> kernel() const;

private:
    GroupPtr domain_;
    GroupPtr codomain_;
    std::vector<Perm> gen_images_;
    std::string anchor_;
    bool verified_ = false;
    bool surjective_ = false;
    std::uint64_t kernel_order_ = 0;

    friend Homomorphism verify_homomorphism(GroupPtr domain, GroupPtr codomain,
                                            std::vector<Perm> gen_images, std::string anchor,
                                            const Budget& budget);
};

/// Runs the graph criterion. One image per domain generator, each lying in
/// the codomain. The result's verified flag says whether the pairing is a
/// homomorphism; nothing throws on a well-posed but non-extending pairing.
Homomorphism verify_homomorphism(GroupPtr domain, GroupPtr codomain,
                                 std::vector<Perm> gen_images, std::string anchor = "",
                                 const Budget& budget = default_budget());

/// As above, but a failure to verify is a defect in a construction that is
/// a theorem; aborts with diagnostics naming the offending generator.
Homomorphism certify_construction(GroupPtr domain, GroupPtr codomain,
                                  std::vector<Perm> gen_images, std::string anchor,
                                  const Budget& budget = default_budget());

/// first, then second. Generator images are composed and re-verified.
Homomorphism compose_homs(const Homomorphism& first, const Homomorphism& second,
                          std::string anchor = "", const Budget& budget = default_budget());

/// The identity map of G, trivially verified.
Homomorphism identity_hom(const GroupPtr& G, std::string anchor = "");

/// Structural equality of realizations: same degree, same generator list.
/// Groups so related have identical sorted element sets.
bool same_realization(const GroupPtr& a, const GroupPtr& b);

/// Exhaustive generator-image search for an isomorphism G -> H, pruned by
/// element-order profiles (orders <= brute cap). Returns the witness or
/// nothing.
std::optional<Homomorphism> is_isomorphic(const GroupPtr& G, const GroupPtr& H,
                                          const Budget& budget = default_budget());

}  // namespace wreathlab
