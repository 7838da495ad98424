#pragma once

// JSON serialization for reports and the user input schema of the `bound`
// subcommand:
//   {"space": {"mode": "real|complex", "weights": [..]?},
//    "vectors": {"name": [[re,im], ...]},
//    "bands":   {"name": {"lo": [re,im], "hi": [re,im]}},
//    "balls":   {"name": {"center": [[re,im],...], "radius": r}
//                or {"lo": [[re,im],...], "hi": [[re,im],...]}},
//    "scalars": {"name": value}}

#include <cstdio>

#include <json.hpp>

#include "ipbounds/runner.hpp"
#include "ipbounds/witnesses.hpp"

namespace ipb::harness {

using json = nlohmann::ordered_json;

inline std::string hexfloat(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}

inline json to_json(const ChainReport& rep, const Tol& tol = {}) {
    json j;
    j["case"] = rep.id;
    j["equation"] = rep.rhs_chain.empty() ? "" : rep.rhs_chain.front().eq;
    j["lhs"] = rep.lhs;
    j["rhs_chain"] = json::array();
    for (const auto& t : rep.rhs_chain) j["rhs_chain"].push_back({{"eq", t.eq}, {"value", t.value}});
    j["hypotheses"] = json::array();
    for (const auto& h : rep.hypotheses)
        j["hypotheses"].push_back({{"name", h.name}, {"holds", h.holds}, {"slack", h.slack}});
    if (!rep.extras.empty()) {
        j["extras"] = json::array();
        for (const auto& t : rep.extras) j["extras"].push_back({{"eq", t.eq}, {"value", t.value}});
    }
    j["gap"] = rep.gap();
    j["tightness"] = rep.tightness();
    const bool ok = rep.holds(tol) && rep.chain_monotone(tol);
    j["status"] = !rep.hypotheses_ok() ? "hypothesis_failed" : (ok ? "pass" : "fail");
    return j;
}

inline json to_json(const TrialReport& r) {
    json j;
    j["case"] = r.case_id;
    j["op"] = r.op;
    j["equation"] = r.equation;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["evaluations"] = r.evaluations;
    j["hypothesis_skips"] = r.hypothesis_skips;
    j["boundary"] = r.boundary_count;
    j["violations"] = json::array();
    for (const auto& v : r.violations) {
        json vj;
        vj["trial"] = v.trial;
        vj["report"] = v.report_id;
        vj["kind"] = v.kind;
        vj["lhs"] = hexfloat(v.lhs);
        vj["rhs_chain"] = json::array();
        for (const auto& t : v.rhs_chain)
            vj["rhs_chain"].push_back({{"eq", t.eq}, {"value", hexfloat(t.value)}});
        j["violations"].push_back(std::move(vj));
    }
    j["max_tightness"] = r.max_tightness;
    j["min_gap"] = r.min_gap;
    // wall time stays off the report so identical runs serialize identically
    j["status"] = r.pass() ? "pass" : "fail";
    return j;
}

inline json to_json(const Study& st) {
    json j;
    j["study"] = st.id;
    j["description"] = st.description;
    j["points"] = json::array();
    for (const auto& p : st.points)
        j["points"].push_back({{"at", p.label}, {"first", p.first}, {"second", p.second}});
    j["both_signs"] = st.both_signs();
    return j;
}

inline std::string to_csv(const std::vector<TrialReport>& reports) {
    std::string out =
        "case,trials,evaluations,hard_violations,boundary,max_tightness,min_gap,status\n";
    char line[256];
    for (const auto& r : reports) {
        std::snprintf(line, sizeof(line), "%s,%zu,%zu,%zu,%zu,%.17g,%.17g,%s\n",
                      r.case_id.c_str(), r.trials, r.evaluations, r.violations.size(),
                      r.boundary_count, r.max_tightness, r.min_gap,
                      r.pass() ? "pass" : "fail");
        out += line;
    }
    return out;
}

// --- input parsing -----------------------------------------------------

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class InputData {
public:
    explicit InputData(const json& j) : j_(j) {
        if (j_.contains("space")) {
            const auto& s = j_["space"];
            Mode mode = Mode::complex;
            if (s.contains("mode")) mode = s["mode"] == "real" ? Mode::real : Mode::complex;
            if (s.contains("weights"))
                space_ = IpSpace(mode, s["weights"].get<std::vector<double>>());
            else
                space_ = IpSpace(mode);
        }
    }

    const IpSpace& space() const { return space_; }

    static Scalar parse_scalar(const json& v) {
        if (v.is_number()) return Scalar{v.get<double>(), 0.0};
        if (v.is_array() && v.size() == 2)
            return Scalar{v[0].get<double>(), v[1].get<double>()};
        throw InputError("scalar must be a number or [re, im]");
    }
    static Vec parse_vec(const json& v) {
        Vec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = parse_scalar(v[i]);
        return out;
    }

    // Real mode is a constrained complex mode: imaginary parts must vanish
    // and all components must be finite.
    Vec checked(Vec v) const {
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (!std::isfinite(re(v[i])) || !std::isfinite(im(v[i])))
                throw InputError("non-finite component");
            if (space_.mode() == Mode::real && im(v[i]) != 0.0)
                throw InputError("real mode requires zero imaginary parts");
        }
        return v;
    }

    Vec vec(const std::string& name) const {
        if (!j_.contains("vectors") || !j_["vectors"].contains(name))
            throw InputError("missing vector '" + name + "'");
        return checked(parse_vec(j_["vectors"][name]));
    }
    // name0, name1, ... consecutively.
    std::vector<Vec> vec_seq(const std::string& prefix) const {
        std::vector<Vec> out;
        if (!j_.contains("vectors")) throw InputError("missing vectors");
        for (std::size_t i = 0;; ++i) {
            const std::string name = prefix + std::to_string(i);
            if (!j_["vectors"].contains(name)) break;
            out.push_back(checked(parse_vec(j_["vectors"][name])));
        }
        if (out.empty()) throw InputError("missing vector sequence '" + prefix + "0...'");
        return out;
    }
    ScalarBand band(const std::string& name) const {
        if (!j_.contains("bands") || !j_["bands"].contains(name))
            throw InputError("missing band '" + name + "'");
        const auto& b = j_["bands"][name];
        return ScalarBand{parse_scalar(b.at("lo")), parse_scalar(b.at("hi"))};
    }
    std::vector<ScalarBand> band_seq(const std::string& prefix) const {
        std::vector<ScalarBand> out;
        if (!j_.contains("bands")) throw InputError("missing bands");
        for (std::size_t i = 0;; ++i) {
            const std::string name = prefix + std::to_string(i);
            if (!j_["bands"].contains(name)) break;
            const auto& b = j_["bands"][name];
            out.push_back({parse_scalar(b.at("lo")), parse_scalar(b.at("hi"))});
        }
        if (out.empty()) throw InputError("missing band sequence '" + prefix + "0...'");
        return out;
    }
    VectorBall ball(const std::string& name) const {
        if (!j_.contains("balls") || !j_["balls"].contains(name))
            throw InputError("missing ball '" + name + "'");
        const auto& b = j_["balls"][name];
        if (b.contains("center"))
            return VectorBall::from_center(parse_vec(b["center"]), b.at("radius").get<double>());
        return VectorBall::from_endpoints(space_, parse_vec(b.at("lo")), parse_vec(b.at("hi")));
    }
    double scalar(const std::string& name) const {
        if (!j_.contains("scalars") || !j_["scalars"].contains(name))
            throw InputError("missing scalar '" + name + "'");
        return j_["scalars"][name].get<double>();
    }
    Scalar complex_scalar(const std::string& name) const {
        if (!j_.contains("scalars") || !j_["scalars"].contains(name))
            throw InputError("missing scalar '" + name + "'");
        return parse_scalar(j_["scalars"][name]);
    }
    bool has_scalar(const std::string& name) const {
        return j_.contains("scalars") && j_["scalars"].contains(name);
    }
    bool has_ball(const std::string& name) const {
        return j_.contains("balls") && j_["balls"].contains(name);
    }

private:
    json j_;
    IpSpace space_{Mode::complex};
};

inline const std::vector<std::string>& bound_adapter_ids() {
    static const std::vector<std::string> ids = {
        "schwarz.additive", "schwarz.cassels",  "schwarz.gamma",   "schwarz.ball",
        "triangle.ball",    "triangle.band",    "gruss.basic",     "gruss.mult",
        "gruss.companion",  "gruss.ball",       "gruss.ball_band", "gruss.dual",
        "bessel.reverse_I", "bessel.reverse_II", "bessel.reverse_III", "bessel.reverse_IV",
        "bessel.family_gruss", "general.span_norm", "general.bessel_type",
        "tuple.variance",   "tuple.pair_gruss", "transform.dft",   "transform.mellin",
        "transform.poly",   "jensen.reverse",   "classic.ostrowski1",
        "classic.ostrowski2", "classic.wagner"};
    return ids;
}

// Evaluate a case family on user-supplied data; the supported ids cover one
// entry point per module.
inline Reports evaluate_on_input(const std::string& id, const InputData& in) {
    const IpSpace& sp = in.space();
    if (id == "schwarz.additive")
        return schwarz::additive_reverse({sp, in.vec("x"), in.vec("y"), in.band("band")});
    if (id == "schwarz.cassels") {
        auto r = schwarz::cassels_reverse({sp, in.vec("x"), in.vec("y"), in.band("band")});
        Reports out{r.multiplicative};
        if (!r.additive_first.rhs_chain.empty()) {
            out.push_back(r.additive_first);
            out.push_back(r.additive_second);
        }
        return out;
    }
    if (id == "schwarz.gamma")
        return schwarz::gamma_reverse({sp, in.vec("x"), in.vec("y"), in.band("band")});
    if (id == "schwarz.ball")
        return schwarz::ball_reverse({sp, in.vec("x"), in.vec("a"), in.scalar("r")});
    if (id == "triangle.ball")
        return schwarz::triangle_reverse_ball({sp, in.vec("x"), in.vec("a"), in.scalar("r")});
    if (id == "triangle.band")
        return schwarz::triangle_reverse_band({sp, in.vec("x"), in.vec("y"), in.band("band")});
    if (id == "gruss.basic" || id == "gruss.mult" || id == "gruss.companion" ||
        id == "gruss.ball_band") {
        gruss::GrussInputs gi{sp,
                              in.vec("x"), in.vec("y"), in.vec("e"),
                              in.band("band_x"), in.band("band_y"),
                              in.has_scalar("lambda") ? in.scalar("lambda") : 0.5};
        if (id == "gruss.basic") return gruss::bound(gi);
        if (id == "gruss.mult") return {gruss::multiplicative(gi)};
        if (id == "gruss.ball_band") return gruss::ball_band(gi);
        auto c = gruss::companion(gi);
        return {c.signed_part, c.absolute};
    }
    if (id == "gruss.ball") {
        gruss::GrussInputs gi;
        gi.space = sp;
        gi.x = in.vec("x");
        gi.y = in.vec("y");
        gi.e = in.vec("e");
        return gruss::ball(gi, in.scalar("r1"), in.scalar("r2"));
    }
    if (id == "gruss.dual")
        return {gruss::dual_projection_bound(sp, in.vec("x"), in.vec("e"), in.band("band_x"))};
    if (id.rfind("bessel.reverse", 0) == 0 || id == "bessel.family_gruss") {
        bessel::FamilyInputs fi;
        fi.space = sp;
        fi.family = OrthonormalFamily(in.vec_seq("e"), sp, 1e-8);
        fi.x = in.vec("x");
        auto bands = in.band_seq("band");
        for (const auto& b : bands) {
            fi.phi.push_back(b.lo);
            fi.Phi.push_back(b.hi);
        }
        if (id == "bessel.reverse_I") return {bessel::reverse_I(fi)};
        if (id == "bessel.reverse_II") return {bessel::reverse_II(fi)};
        if (id == "bessel.reverse_III") return bessel::reverse_III(fi);
        if (id == "bessel.reverse_IV") {
            fi.gam = fi.phi;
            fi.Gam = fi.Phi;
            return bessel::reverse_IV(fi);
        }
        fi.y = in.vec("y");
        auto ybands = in.band_seq("yband");
        for (const auto& b : ybands) {
            fi.gam.push_back(b.lo);
            fi.Gam.push_back(b.hi);
        }
        return bessel::family_gruss(fi);
    }
    if (id == "general.span_norm") {
        auto zs = in.vec_seq("z");
        CoeffVec alphas;
        for (std::size_t i = 0; i < zs.size(); ++i)
            alphas.push_back(in.complex_scalar("alpha" + std::to_string(i)));
        return table_reports(general::span_norm_bounds(sp, alphas, zs));
    }
    if (id == "general.bessel_type")
        return table_reports(general::bessel_type_bounds(sp, in.vec("x"), in.vec_seq("y")));
    if (id == "tuple.variance") {
        auto xs = in.vec_seq("x");
        tuples::WeightedTuple t;
        t.xs = xs;
        t.p.assign(xs.size(), 1.0 / static_cast<double>(xs.size()));
        return {tuples::weighted_variance(sp, t, in.ball("ball_x"))};
    }
    if (id == "tuple.pair_gruss") {
        tuples::WeightedTuple t;
        t.xs = in.vec_seq("x");
        t.ys = in.vec_seq("y");
        t.p.assign(t.xs.size(), 1.0 / static_cast<double>(t.xs.size()));
        return tuples::pair_gruss(sp, t, in.ball("ball_x"), in.ball("ball_y"));
    }
    if (id == "transform.dft")
        return {transforms::dft_approx_bound(sp, in.vec_seq("x"), in.ball("ball_x"),
                                             in.scalar("w"),
                                             static_cast<std::size_t>(in.scalar("m")))};
    if (id == "transform.mellin")
        return {transforms::mellin_bound(sp, in.vec_seq("x"), in.ball("ball_x"),
                                         static_cast<std::size_t>(in.scalar("m")))};
    if (id == "transform.poly")
        return {transforms::poly_bound(sp, in.vec_seq("c"), in.ball("ball_c"),
                                       in.complex_scalar("z"))};
    if (id == "jensen.reverse") {
        transforms::JensenInputs ji;
        ji.space = sp;
        ji.f = transforms::ConvexFn::norm_sq(sp);
        ji.zs = in.vec_seq("z");
        ji.q.assign(ji.zs.size(), 1.0 / static_cast<double>(ji.zs.size()));
        ji.grad_ball = in.ball("grad_ball");
        if (in.has_ball("z_ball")) ji.z_ball = in.ball("z_ball");
        return transforms::jensen_reverse(ji);
    }
    if (id == "classic.ostrowski1")
        return {classic::ostrowski_first({sp, in.vec("a"), in.vec("b"), in.vec("x")})};
    if (id == "classic.ostrowski2")
        return {classic::ostrowski_second({sp, in.vec("a"), in.vec("b"), in.vec("x")})};
    if (id == "classic.wagner")
        return {classic::wagner({sp, in.vec_seq("x"), in.vec_seq("y"), in.scalar("alpha")})};
    std::string known;
    for (const auto& k : bound_adapter_ids()) known += " " + k;
    throw InputError("no input adapter for case '" + id + "'; supported:" + known);
}

}  // namespace ipb::harness
