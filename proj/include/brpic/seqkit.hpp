#pragma once

#include "brpic/abelian.hpp"
#include "brpic/fieldtable.hpp"
#include "brpic/fusion.hpp"
#include "brpic/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brpic {

struct SeqNode {
    std::optional<FinAb> group; // nullopt = UNKNOWN
    std::string name;
};

// Chain of finite abelian groups with homomorphisms between consecutive
// known nodes. At most one node may be unknown; maps touching it are
// omitted. The K^x -- K^x head of the long sequence is recorded as a
// symbolic prefix in reports, never computed.
struct ExactSequenceInstance {
    std::vector<SeqNode> nodes;
    std::vector<std::optional<AbHom>> maps; // maps[i]: nodes[i] -> nodes[i+1]
    bool left_exact_start = true;           // first map must be injective
    std::optional<bool> surjective_end;
    std::string symbolic_prefix; // e.g. "K^x -> K^x -> 0 (identity at the head)"
};

struct NodeReport {
    std::string node;
    bool pass = false;
    std::string detail; // witness element on failure
};

struct ExactnessReport {
    std::vector<NodeReport> checks;
    bool pass = false;
};

// Image = kernel at every interior node, by element enumeration (orders
// capped at 10^4). Requires all nodes known. Throws MalformedMap /
// UnknownNode.
ExactnessReport verify_exactness(const ExactSequenceInstance& seq);

struct BrPicSolution {
    long order = 0;
    std::optional<FinAb> iso_type; // nullopt = UNDETERMINED
    std::string note;
};

// Order chase through Inv -> Aut_t -> Br -> BrPic ->> Aut_br (the last
// surjective when H^3(K; Gm) = 1): |BrPic| = |Aut_br| |Br| |Inv| / |Aut_t|.
// Throws NotDivisible on inconsistent orders, H3Obstruction (with the
// bounding range) when h3_trivial is false.
BrPicSolution solve_brpic(const FinAb& inv, const FinAb& aut_t, const FinAb& br,
                          const FinAb& aut_br, bool h3_trivial);

struct ExtensionRecord {
    std::vector<int> f_values; // f(g) in {0,1}, one per group element
    int phi_index = 0;         // class index in H^3(G; R^x reduced)
    FusionRingData fusion;
};

// G-graded extensions of Vec_R: one record per pair (f, phi) with
// f: G -> Z/2 and phi in H^3(G; R^x). Simples X_g, End(X_g) = R or H as
// f(g) = 0 or 1, X_g (x) X_h = 4^{f(g) f(h)} X_{gh}. Every emitted ring is
// validated. Only the real case is enabled: the split Postnikov extension
// is a curated fact for R, so other fields refuse with
// UnknownPostnikovClass.
std::vector<ExtensionRecord> classify_vecR_extensions(const FiniteGroup& g);
std::vector<ExtensionRecord> classify_graded_extensions(const FiniteGroup& g,
                                                        const BaseField& base);

// Z/2-graded extensions of the quaternionic Tambara-Yamagami real form:
// |H^2(Z/2; Z/2)| * |H^3(Z/2; R^x)| = 4, gated on the sign identity that
// keeps the top obstruction trivial.
int count_Qminus_Z2_extensions();

} // namespace brpic
