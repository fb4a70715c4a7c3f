// Command-line front end for the frame-multiplier library.
//
// Exit codes: 0 success, 1 internal error, 2 mathematical failure
// (singular operator, sequence not a frame, ...), 3 malformed input.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "framemult/json_io.hpp"
#include "framemult/random.hpp"
#include "framemult/verification.hpp"

namespace {

using namespace framemult;

struct CommonOpts {
    double rank_tol = tol::kRank;
    double inverse_tol = tol::kInverse;
    std::uint64_t seed = 0x5eed;
    std::string format = "text";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tolerance-rank", o.rank_tol, "relative rank / singularity threshold");
    cmd->add_option("--tolerance-inverse", o.inverse_tol,
                    "Frobenius tolerance for inverse compositions");
    cmd->add_option("--seed", o.seed, "seed for randomized constructions");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out_path, "write output to FILE instead of stdout");
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

void emit(const CommonOpts& o, const Json& json_doc, const std::string& text_doc) {
    const std::string body = o.format == "json" ? json_doc.dump(2) + "\n" : text_doc;
    if (o.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(o.out_path);
        if (!out) throw InputError("cannot open output file: " + o.out_path);
        out << body;
    }
}

const char* kind_name(FrameClass::Kind k) {
    switch (k) {
        case FrameClass::Kind::SpanningFrame: return "spanning_frame";
        case FrameClass::Kind::RieszBasis: return "riesz_basis";
        case FrameClass::Kind::NonSpanning: return "non_spanning";
    }
    return "?";
}

int run_bounds(const std::string& input, const CommonOpts& o) {
    const FrameSeq phi = frame_from_json(load_json(input));
    const FrameBounds b = frame_bounds(phi);
    const FrameClass fc = classify(phi, o.rank_tol);
    Json j{{"dim", phi.dim()},
           {"count", phi.size()},
           {"lower", b.lower},
           {"upper", b.upper},
           {"kind", kind_name(fc.kind)},
           {"minimal", fc.minimal}};
    std::ostringstream t;
    t << "sequence of " << phi.size() << " vectors in C^" << phi.dim() << "\n"
      << "optimal bounds: lower " << b.lower << ", upper " << b.upper << "\n"
      << "classification: " << kind_name(fc.kind) << (fc.minimal ? ", minimal" : "") << "\n";
    emit(o, j, t.str());
    return 0;
}

int run_dual(const std::string& input, const std::string& kind, const CommonOpts& o) {
    const FrameSeq phi = frame_from_json(load_json(input));
    const FrameSeq dual = kind == "random" ? random_dual(phi, o.seed) : canonical_dual(phi);
    Json j = to_json(dual);
    std::ostringstream t;
    t << (kind == "random" ? "random" : "canonical") << " dual frame:\n" << j.dump(2) << "\n";
    emit(o, j, t.str());
    return 0;
}

int run_apply(const std::string& mult_path, const std::string& vec_path, const CommonOpts& o) {
    const Multiplier M = multiplier_from_json(load_json(mult_path));
    const CVector h = vector_from_json(load_json(vec_path));
    const CVector out = apply(M, h);
    Json j = to_json(out);
    emit(o, j, j.dump(2) + "\n");
    return 0;
}

int run_invert(const std::string& mult_path, const std::string& method,
               const std::string& dual_kind, const CommonOpts& o) {
    const Multiplier M = multiplier_from_json(load_json(mult_path));

    std::string chosen = method;
    if (chosen == "auto") {
        if (M.m.constant_value()) {
            chosen = "constant-symbol";
        } else if (classify(M.phi, o.rank_tol).kind == FrameClass::Kind::RieszBasis &&
                   classify(M.psi, o.rank_tol).kind == FrameClass::Kind::RieszBasis) {
            chosen = "riesz";
        } else {
            chosen = "dagger";
        }
    }

    if (chosen == "constant-symbol") {
        const InverseReport rep = constant_symbol_inverse(M, o.inverse_tol);
        Json j = to_json(rep);
        j["method"] = chosen;
        std::ostringstream t;
        t << "method: constant-symbol\n"
          << "classification: " << classification_name(rep.classification) << "\n";
        if (rep.left_residual) t << "candidate left residual:  " << *rep.left_residual << "\n";
        if (rep.right_residual) t << "candidate right residual: " << *rep.right_residual << "\n";
        if (rep.inverse) t << "inverse multiplier emitted (use --format json to print it)\n";
        emit(o, j, t.str());
        return rep.classification == InverseReport::Classification::TwoSided ? 0 : 2;
    }

    Multiplier inv = [&] {
        if (chosen == "riesz") return riesz_inverse(M);
        const FrameSeq phid = dual_kind == "random" ? random_dual(M.phi, o.seed)
                                                    : canonical_dual(M.phi);
        const FrameSeq psid = dual_kind == "random" ? random_dual(M.psi, o.seed + 1)
                                                    : canonical_dual(M.psi);
        return inverse_as_multiplier(M, phid, psid).first;
    }();
    const InverseResiduals res = verify_inverse(M, inv);
    const double worst = std::max(res.left, res.right);
    Json j{{"method", chosen},
           {"left_residual", res.left},
           {"right_residual", res.right},
           {"inverse", to_json(inv)}};
    std::ostringstream t;
    t << "method: " << chosen << "\n"
      << "left residual:  " << res.left << "\n"
      << "right residual: " << res.right << "\n"
      << (worst <= o.inverse_tol ? "inverse verified\n" : "inverse NOT verified\n");
    emit(o, j, t.str());
    return worst <= o.inverse_tol ? 0 : 2;
}

int run_gabor(const std::string& system_path, const std::string& op,
              const std::string& operator_path, const CommonOpts& o) {
    const GaborSystem G = gabor_from_json(load_json(system_path));

    if (op == "frame") {
        Json j = to_json(gabor_frame(G));
        emit(o, j, j.dump(2) + "\n");
        return 0;
    }
    if (op == "dual-window") {
        Json j = to_json(canonical_dual_window(G));
        emit(o, j, j.dump(2) + "\n");
        return 0;
    }

    if (operator_path.empty())
        throw InputError("gabor " + op + " requires --operator MATRIX.json");
    const CMatrix V = matrix_from_json(load_json(operator_path));

    if (op == "commute") {
        const bool on_window = commutes_on_window(V, G, o.inverse_tol);
        const bool all = commutes_all(V, G.lattice, o.inverse_tol);
        Json j{{"commutes_on_window", on_window}, {"commutes_all", all}};
        std::ostringstream t;
        t << "commutes on window: " << (on_window ? "yes" : "no") << "\n"
          << "commutes on C^L:    " << (all ? "yes" : "no") << "\n";
        emit(o, j, t.str());
        return on_window ? 0 : 2;
    }
    if (op == "represent") {
        const Multiplier M = as_gabor_multiplier(V, G);
        const double residual = frobenius_distance(to_matrix(M), V);
        Json j{{"residual", residual}, {"multiplier", to_json(M)}};
        std::ostringstream t;
        t << "Gabor multiplier representation residual: " << residual << "\n";
        emit(o, j, t.str());
        return residual <= o.inverse_tol * std::max(1.0, V.frobenius_norm()) ? 0 : 2;
    }
    if (op == "invert") {
        const Multiplier inv = inverse_gabor_multiplier(V, G);
        const double residual = identity_residual(to_matrix(inv) * V);
        Json j{{"residual", residual}, {"inverse", to_json(inv)}};
        std::ostringstream t;
        t << "inverse composition residual: " << residual << "\n";
        emit(o, j, t.str());
        return residual <= o.inverse_tol ? 0 : 2;
    }
    throw InputError("unknown gabor operation: " + op);
}

int run_verify(const CommonOpts& o) {
    RunConfig cfg;
    cfg.rank_tol = o.rank_tol;
    cfg.inverse_tol = o.inverse_tol;
    cfg.seed = o.seed;
    const VerificationReport rep = run_verification(cfg);

    Json checks = Json::array();
    std::ostringstream t;
    for (const auto& c : rep.checks) {
        checks.push_back({{"id", c.id},
                          {"description", c.description},
                          {"passed", c.passed},
                          {"residual", c.residual},
                          {"detail", c.detail}});
        t << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " (worst residual " << c.residual
          << ")\n";
        if (!c.passed) t << "       " << c.detail << "\n";
    }
    Json j{{"all_passed", rep.all_passed()}, {"checks", checks}};
    emit(o, j, t.str());
    return rep.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frame multiplier toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input, vec_path, operator_path;
    std::string dual_kind = "canonical", method = "auto", gabor_op;

    auto* bounds = app.add_subcommand("bounds", "optimal frame bounds and classification");
    bounds->add_option("input", input, "frame JSON file")->required();
    add_common(bounds, opts);

    auto* dual = app.add_subcommand("dual", "canonical or randomized dual frame");
    dual->add_option("input", input, "frame JSON file")->required();
    dual->add_option("--kind", dual_kind, "canonical|random")
        ->check(CLI::IsMember({"canonical", "random"}));
    add_common(dual, opts);

    auto* apply_cmd = app.add_subcommand("apply", "apply a multiplier to a vector");
    apply_cmd->add_option("multiplier", input, "multiplier JSON file")->required();
    apply_cmd->add_option("vector", vec_path, "vector JSON file")->required();
    add_common(apply_cmd, opts);

    auto* invert = app.add_subcommand("invert", "invert a frame multiplier");
    invert->add_option("multiplier", input, "multiplier JSON file")->required();
    invert->add_option("--method", method, "auto|riesz|dagger|constant-symbol")
        ->check(CLI::IsMember({"auto", "riesz", "dagger", "constant-symbol"}));
    invert->add_option("--dual", dual_kind, "duals used by the dagger representation")
        ->check(CLI::IsMember({"canonical", "random"}));
    add_common(invert, opts);

    auto* gabor = app.add_subcommand("gabor", "discrete Gabor system operations");
    gabor->add_option("system", input, "Gabor system JSON file")->required();
    gabor->add_option("--op", gabor_op, "frame|dual-window|commute|represent|invert")
        ->required()
        ->check(CLI::IsMember({"frame", "dual-window", "commute", "represent", "invert"}));
    gabor->add_option("--operator", operator_path, "matrix JSON file (L x L operator)");
    add_common(gabor, opts);

    auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
    add_common(verify, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed()) return run_bounds(input, opts);
        if (dual->parsed()) return run_dual(input, dual_kind, opts);
        if (apply_cmd->parsed()) return run_apply(input, vec_path, opts);
        if (invert->parsed()) return run_invert(input, method, dual_kind, opts);
        if (gabor->parsed()) return run_gabor(input, gabor_op, operator_path, opts);
        if (verify->parsed()) return run_verify(opts);
    } catch (const framemult::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const framemult::DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const framemult::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
