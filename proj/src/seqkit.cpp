#include "brpic/seqkit.hpp"

#include "brpic/cohomology.hpp"
#include "brpic/error.hpp"

#include <algorithm>
#include <set>

namespace brpic {

namespace {

constexpr long kMaxNodeOrder = 10000;

std::string tuple_str(const std::vector<long>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::set<std::vector<long>> image_of(const AbHom& h)
{
    std::set<std::vector<long>> out;
    for (const auto& x : h.source.elements(kMaxNodeOrder)) out.insert(h.apply(x));
    return out;
}

std::set<std::vector<long>> kernel_of(const AbHom& h)
{
    std::set<std::vector<long>> out;
    const std::vector<long> zero(h.target.factors.size(), 0);
    for (const auto& x : h.source.elements(kMaxNodeOrder))
        if (h.apply(x) == zero) out.insert(x);
    return out;
}

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

} // namespace

ExactnessReport verify_exactness(const ExactSequenceInstance& seq)
{
    const std::size_t n = seq.nodes.size();
    if (n < 2)
        throw Error("MalformedMap", "a sequence needs at least two nodes");
    for (const auto& node : seq.nodes)
        if (!node.group)
            throw Error("UnknownNode", "verify_exactness requires all nodes known");
    if (seq.maps.size() != n - 1)
        throw Error("MalformedMap", "need exactly one map per consecutive pair");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!seq.maps[i])
            throw Error("MalformedMap", "map " + std::to_string(i) + " missing");
        const AbHom& h = *seq.maps[i];
        if (!(h.source == *seq.nodes[i].group) || !(h.target == *seq.nodes[i + 1].group))
            throw Error("MalformedMap", "map " + std::to_string(i) + " endpoints mismatch");
        validate_hom(h);
        if (seq.nodes[i].group->order() > kMaxNodeOrder)
            throw Error("TooLarge", "node order exceeds " + std::to_string(kMaxNodeOrder));
    }

    ExactnessReport report;
    report.pass = true;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back({name, pass, detail});
        if (!pass) report.pass = false;
    };

    if (seq.left_exact_start) {
        auto ker = kernel_of(*seq.maps[0]);
        bool inj = ker.size() == 1;
        std::string wit;
        if (!inj)
            for (const auto& k : ker)
                if (k != std::vector<long>(k.size(), 0)) {
                    wit = "kernel contains " + tuple_str(k);
                    break;
                }
        add(seq.nodes[0].name + " (injectivity)", inj, wit);
    }

    for (std::size_t i = 1; i + 1 < n; ++i) {
        auto img = image_of(*seq.maps[i - 1]);
        auto ker = kernel_of(*seq.maps[i]);
        if (img == ker) {
            add(seq.nodes[i].name, true, "");
            continue;
        }
        std::string wit;
        for (const auto& x : img)
            if (!ker.count(x)) {
                wit = "image element " + tuple_str(x) + " is not in the kernel";
                break;
            }
        if (wit.empty())
            for (const auto& x : ker)
                if (!img.count(x)) {
                    wit = "kernel element " + tuple_str(x) + " is not in the image";
                    break;
                }
        add(seq.nodes[i].name, false, wit);
    }

    if (seq.surjective_end && *seq.surjective_end) {
        auto img = image_of(*seq.maps[n - 2]);
        bool surj = static_cast<long>(img.size()) == seq.nodes[n - 1].group->order();
        add(seq.nodes[n - 1].name + " (surjectivity)", surj,
            surj ? "" : "image has order " + std::to_string(img.size()));
    }
    return report;
}

BrPicSolution solve_brpic(const FinAb& inv, const FinAb& aut_t, const FinAb& br,
                          const FinAb& aut_br, bool h3_trivial)
{
    const long o_inv = inv.order();
    const long o_aut = aut_t.order();
    const long o_br = br.order();
    const long o_abr = aut_br.order();

    if (o_aut % o_inv != 0)
        throw Error("NotDivisible", "|Inv| = " + std::to_string(o_inv) +
                                        " must divide |Aut_t| = " + std::to_string(o_aut));
    const long im_in_br = o_aut / o_inv; // exactness at Aut_t: ker = Inv
    if (o_br % im_in_br != 0)
        throw Error("NotDivisible",
                    "image order " + std::to_string(im_in_br) + " must divide |Br| = " +
                        std::to_string(o_br));
    const long kernel_part = o_br / im_in_br; // |im(Br -> BrPic)| = |ker pi0(Phi)|

    if (!h3_trivial)
        throw Error("H3Obstruction",
                    "pi0(Phi) need not be surjective; |BrPic| only bounded in [" +
                        std::to_string(kernel_part) + ", " +
                        std::to_string(kernel_part * o_abr) + "]");

    BrPicSolution s;
    s.order = kernel_part * o_abr;
    if (kernel_part == 1) {
        s.iso_type = aut_br;
        s.note = "Br -> BrPic is forced zero; BrPic = Aut_br";
    }
    else if (o_abr == 1) {
        if (im_in_br == 1) {
            s.iso_type = br;
            s.note = "Aut_t -> Br is forced zero; Br embeds onto BrPic";
        }
        else if (is_prime(kernel_part)) {
            s.iso_type = FinAb::of({kernel_part});
            s.note = "BrPic is the Br-kernel part, cyclic of prime order";
        }
        else {
            s.note = "quotient of Br of order " + std::to_string(kernel_part) +
                     "; structure not determined by orders";
        }
    }
    else {
        s.note = "extension of Aut_br by the Br-kernel part; iso type UNDETERMINED";
    }
    return s;
}

std::vector<ExtensionRecord> classify_graded_extensions(const FiniteGroup& g,
                                                        const BaseField& base)
{
    if (base.kind != BaseField::Kind::R)
        throw Error("UnknownPostnikovClass",
                    "the split classifying-space extension is only on record for R");

    // f runs over Hom(G, Z/2) = normalized 1-cocycles with Z/2 coefficients
    GModule z2 = trivial_module_Zn(g, 2);
    std::vector<Cocycle> homs = cocycle_representatives(g, z2, 1);

    GModule rx = reduce_unit_coefficients(base, 3, g);
    CohomologyGroup h3 = cohomology(g, rx, 3);
    const long phi_count = h3.order();

    std::vector<ExtensionRecord> out;
    for (const auto& hom : homs) {
        std::vector<int> f(g.order, 0);
        for (int e = 1; e < g.order; ++e)
            f[e] = static_cast<int>(mpz_class(hom.at({e})[0] % 2).get_si());

        FusionRingData ring;
        for (int e = 0; e < g.order; ++e) {
            std::string label =
                g.labels.empty() ? "X" + std::to_string(e) : "X_" + g.labels[e];
            ring.simples.push_back(label);
        }
        ring.unit = 0;
        ring.base_field = base;
        ring.n.assign(g.order, std::vector<std::vector<long>>(
                                   g.order, std::vector<long>(g.order, 0)));
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                ring.n[a][b][g.mul(a, b)] = (f[a] && f[b]) ? 4 : 1;
        for (int a = 0; a < g.order; ++a) {
            ring.dual.push_back(g.inv(a));
            ring.ends.push_back(f[a] ? EndLabel::h() : EndLabel::r());
        }
        ring = validate_fusion_ring(std::move(ring));

        for (long phi = 0; phi < phi_count; ++phi) {
            ExtensionRecord rec;
            rec.f_values = f;
            rec.phi_index = static_cast<int>(phi);
            rec.fusion = ring;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<ExtensionRecord> classify_vecR_extensions(const FiniteGroup& g)
{
    return classify_graded_extensions(g, BaseField::reals());
}

int count_Qminus_Z2_extensions()
{
    if (!pw_sign_identity_check())
        throw Error("Internal", "sign identity gate failed; O4 cannot be recorded trivial");
    FiniteGroup z2 = cyclic_group(2);
    long h2 = cohomology(z2, trivial_module_Zn(z2, 2), 2).order();
    long h3 = cohomology(z2, reduce_unit_coefficients(BaseField::reals(), 3, z2), 3).order();
    return static_cast<int>(h2 * h3);
}

} // namespace brpic
