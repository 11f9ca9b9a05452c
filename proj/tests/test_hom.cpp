#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "wreathlab/catalog.hpp"
#include "wreathlab/functorial.hpp"
#include "wreathlab/hom.hpp"
#include "wreathlab/wreath.hpp"

using namespace wreathlab;

namespace {

// Naive oracle: extend the generator pairing to a full image table by word
// propagation, then check multiplicativity over the entire multiplication
// table. Independent of the graph-closure route.
bool naive_is_homomorphism(const GroupPtr& G, const GroupPtr& H, const std::vector<Perm>& images) {
    REQUIRE(G->order() <= 256);
    const auto& els = G->elements();
    std::vector<std::optional<Perm>> image(els.size());
    image[static_cast<std::size_t>(G->index_of(Perm::identity(G->degree())))] =
        Perm::identity(H->degree());
    // breadth-first propagation: image(x*g) := image(x)*image(g)
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int cur = queue[qi];
        for (std::size_t gi = 0; gi < G->generators().size(); ++gi) {
            const int nxt = G->index_of(compose(els[static_cast<std::size_t>(cur)], G->generators()[gi]));
            Perm cand = compose(*image[static_cast<std::size_t>(cur)], images[gi]);
            if (!image[static_cast<std::size_t>(nxt)].has_value()) {
                image[static_cast<std::size_t>(nxt)] = cand;
                queue.push_back(nxt);
            } else if (!(*image[static_cast<std::size_t>(nxt)] == cand)) {
                return false;  // two words for one element disagree
            }
        }
    }
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = 0; j < els.size(); ++j) {
            const int ij = G->index_of(compose(els[i], els[j]));
            if (!(*image[static_cast<std::size_t>(ij)] == compose(*image[i], *image[j])))
                return false;
        }
    return true;
}

}  // namespace

TEST_CASE("verify_homomorphism: identity pairing") {
    auto G = symmetric3();
    Homomorphism h = verify_homomorphism(G, G, G->generators());
    CHECK(h.verified());
    CHECK(h.surjective());
    CHECK(h.kernel_order() == 1);
    CHECK(h.isomorphism());
}

TEST_CASE("verify_homomorphism: C4 onto C2") {
    auto C4 = cyclic(4);
    auto C2 = cyclic(2);
    Homomorphism h = verify_homomorphism(C4, C2, {C2->generators()[0]});
    CHECK(h.verified());
    CHECK(h.surjective());
    CHECK(h.kernel_order() == 2);
}

TEST_CASE("verify_homomorphism: C2 to an order-4 element is not a map") {
    auto C2 = cyclic(2);
    auto C4 = cyclic(4);
    Homomorphism h = verify_homomorphism(C2, C4, {C4->generators()[0]});
    CHECK_FALSE(h.verified());
}

TEST_CASE("verify_homomorphism validates inputs") {
    auto G = symmetric3();
    CHECK_THROWS_AS(verify_homomorphism(G, G, {G->generators()[0]}), DomainError);  // wrong count
    CHECK_THROWS_AS(
        verify_homomorphism(G, cyclic(2), {Perm::identity(2), Perm::identity(3)}),
        DomainError);  // image outside codomain
}

TEST_CASE("image_of evaluates by word factorization") {
    auto C4 = cyclic(4);
    auto C2 = cyclic(2);
    Homomorphism h = verify_homomorphism(C4, C2, {C2->generators()[0]});
    const Perm g = C4->generators()[0];
    CHECK(h.image_of(g) == C2->generators()[0]);
    CHECK(h.image_of(compose(g, g)).is_identity());
    // multiplicativity over all pairs
    for (const Perm& x : C4->elements())
        for (const Perm& y : C4->elements())
            CHECK(h.image_of(compose(x, y)) == compose(h.image_of(x), h.image_of(y)));
}

TEST_CASE("kernel as a set") {
    auto C4 = cyclic(4);
    auto C2 = cyclic(2);
    Homomorphism h = verify_homomorphism(C4, C2, {C2->generators()[0]});
    auto ker = h.kernel();
    CHECK(ker.size() == 2);
    Perm sq = compose(C4->generators()[0], C4->generators()[0]);
    CHECK(std::binary_search(ker.begin(), ker.end(), sq));

    // kernel of a verified injective map is trivial
    Homomorphism id = identity_hom(symmetric3());
    CHECK(id.kernel().size() == 1);
}

TEST_CASE("compose_homs re-verifies and composes images") {
    auto C8 = cyclic(8);
    auto C4 = cyclic(4);
    auto C2 = cyclic(2);
    Homomorphism f = verify_homomorphism(C8, C4, {C4->generators()[0]});
    Homomorphism g = verify_homomorphism(C4, C2, {C2->generators()[0]});
    Homomorphism fg = compose_homs(f, g);
    CHECK(fg.verified());
    CHECK(fg.surjective());
    CHECK(fg.kernel_order() == 4);

    Homomorphism with_id = compose_homs(f, identity_hom(C4));
    CHECK(with_id.gen_images() == f.gen_images());

    CHECK_THROWS_AS(compose_homs(g, f), DomainError);  // domains do not chain
}

TEST_CASE("graph criterion agrees with the naive oracle on random pairings") {
    std::mt19937_64 rng(987);
    std::vector<GroupPtr> groups{cyclic(4),  cyclic(6),    symmetric3(),
                                 dihedral(4), quaternion8(), alternating4()};
    int verified_count = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const GroupPtr& G = groups[trial % groups.size()];
        const GroupPtr& H = groups[(trial / groups.size()) % groups.size()];
        std::uniform_int_distribution<int> pickH(0, static_cast<int>(H->order()) - 1);
        std::vector<Perm> images;
        for (std::size_t i = 0; i < G->generators().size(); ++i)
            images.push_back(H->element(pickH(rng)));
        Homomorphism h = verify_homomorphism(G, H, images);
        CHECK(h.verified() == naive_is_homomorphism(G, H, images));
        if (h.verified()) ++verified_count;
    }
    CHECK(verified_count > 0);  // the corpus exercises both outcomes
}

TEST_CASE("is_isomorphic finds witnesses and refutes") {
    auto W = regular_wreath(cyclic(2), cyclic(2));
    auto iso = is_isomorphic(W.carrier(), dihedral(4));
    REQUIRE(iso.has_value());
    CHECK(iso->isomorphism());

    CHECK_FALSE(is_isomorphic(dihedral(4), quaternion8()).has_value());
    CHECK_FALSE(is_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))).has_value());
    CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)).has_value());
    CHECK_FALSE(is_isomorphic(cyclic(6), symmetric3()).has_value());

    // S3 x C3 is the wreath product C3 wr C2 in disguise
    auto S3C3 = direct_product(symmetric3(), cyclic(3));
    CHECK(is_isomorphic(regular_wreath(cyclic(3), cyclic(2)).carrier(), S3C3).has_value());
}

TEST_CASE("rebase_domain re-expresses a map on another generating set") {
    auto C6 = cyclic(6);
    auto C3 = cyclic(3);
    Homomorphism h = verify_homomorphism(
        C6, C3, {compose(C3->generators()[0], Perm::identity(3))});
    // same element set generated differently: use squares as generators
    Perm c = C6->generators()[0];
    GroupPtr C6alt = FiniteGroup::from_elements(6, {compose(c, c), compose(c, compose(c, c))},
                                                C6->elements(), "C6alt");
    Homomorphism r = rebase_domain(h, C6alt);
    CHECK(r.verified());
    for (const Perm& x : C6->elements()) CHECK(r.image_of(x) == h.image_of(x));
}
