#include <doctest.h>

#include <algorithm>

#include "spc/errors.hpp"
#include "spc/verify.hpp"

using namespace spc;

namespace {

// Mutation used by the oracle self-test: one extra colour on the first
// interior vertex of every path widens the Z block to fold size.
void widen_z_block(GadgetBundle& bundle) {
    Colour fresh = 0;
    for (const auto& [v, set] : bundle.lists)
        if (!set.empty()) fresh = std::max(fresh, set.values().back() + 1);
    for (const auto& entry : bundle.pairing) bundle.lists[entry.path[1]].insert(fresh);
}

} // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("the smallest bundle is fully uncolourable") {
    GadgetBundle bundle = build_gadget(3, 2, 1);
    GadgetCertificate cert = verify_gadget_serial(bundle);
    CHECK(cert.pairs_checked == 100);
    CHECK(cert.all_uncolourable);
    CHECK(cert.defects.empty());
}

TEST_CASE("parallel kernel matches the serial reference") {
    GadgetBundle bundle = build_gadget(4, 2, 1);
    GadgetCertificate serial = verify_gadget_serial(bundle);
    for (int workers : {0, 1, 2, 3}) {
        GadgetCertificate parallel = verify_gadget(bundle, workers);
        CHECK(parallel.pairs_checked == serial.pairs_checked);
        CHECK(parallel.all_uncolourable == serial.all_uncolourable);
        CHECK(parallel.defects.size() == serial.defects.size());
    }
}

TEST_CASE("a widened slack block is caught with a witness") {
    GadgetBundle bundle = build_gadget(3, 2, 1);
    widen_z_block(bundle);
    GadgetCertificate cert = verify_gadget(bundle);
    CHECK_FALSE(cert.all_uncolourable);
    CHECK_FALSE(cert.defects.empty());

    // every reported witness really is a valid pinned colouring of its path
    for (const GadgetDefect& defect : cert.defects) {
        const auto& entry = bundle.pairing[static_cast<std::size_t>(defect.pair_index)];
        CHECK(defect.s == entry.s);
        CHECK(defect.t == entry.t);
        CHECK(defect.witness.colours.at(entry.path.front()) == entry.s);
        CHECK(defect.witness.colours.at(entry.path.back()) == entry.t);
        CHECK(check_colouring(bundle.graph, bundle.lists, defect.witness, bundle.m).ok());
    }

    // serial and parallel agree defect by defect
    GadgetCertificate serial = verify_gadget_serial(bundle);
    REQUIRE(serial.defects.size() == cert.defects.size());
    for (std::size_t i = 0; i < serial.defects.size(); ++i)
        CHECK(serial.defects[i].pair_index == cert.defects[i].pair_index);
}

TEST_CASE("structural validation rejects broken bundles") {
    GadgetBundle missing = build_gadget(3, 2, 1);
    missing.pairing.pop_back();
    CHECK_THROWS_AS(verify_gadget(missing), PreconditionError);

    GadgetBundle shuffled = build_gadget(3, 2, 1);
    std::swap(shuffled.pairing[0], shuffled.pairing[1]);
    CHECK_THROWS_AS(verify_gadget(shuffled), PreconditionError);

    GadgetBundle unhinged = build_gadget(3, 2, 1);
    unhinged.pairing[5].path[1] = unhinged.pairing[6].path[1]; // shared interior
    CHECK_THROWS_AS(verify_gadget(unhinged), PreconditionError);

    GadgetBundle mislabeled = build_gadget(3, 2, 1);
    mislabeled.lists[0] = ColourSet{0, 1, 2, 3, 7};
    CHECK_THROWS_AS(verify_gadget(mislabeled), PreconditionError);

    GadgetBundle off = build_gadget(3, 2, 1);
    off.p = 99;
    CHECK_THROWS_AS(verify_gadget(off), PreconditionError);
}

TEST_SUITE_END();
