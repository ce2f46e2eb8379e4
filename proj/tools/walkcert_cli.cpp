#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkcert/certify.hpp"
#include "walkcert/graph.hpp"
#include "walkcert/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw walkcert::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& doc, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw walkcert::ParseError("cannot open output file: " + output_path);
    out << doc;
}

struct MatrixInput {
    walkcert::IntMatrix matrix;
    walkcert::IntVector vector;
    std::string hash; // compact hex encoding when the input is a 0/1 graph
};

MatrixInput load_input(const std::string& path, const std::string& inline_code,
                       const std::string& vector_path) {
    MatrixInput in;
    if (!inline_code.empty()) {
        walkcert::LoopyGraph g = walkcert::parse_compact(inline_code);
        in.matrix = g.adjacency();
        in.hash = g.compact();
    } else {
        in.matrix = walkcert::parse_symmetric_matrix(read_file(path));
        bool zero_one = true;
        for (std::size_t i = 0; i < in.matrix.dim() && zero_one; ++i)
            for (std::size_t j = 0; j < in.matrix.dim() && zero_one; ++j)
                if (in.matrix.at(i, j) != 0 && in.matrix.at(i, j) != 1) zero_one = false;
        if (zero_one && in.matrix.dim() <= walkcert::kMaxEncodableVertices)
            in.hash = walkcert::LoopyGraph::from_adjacency(in.matrix).compact();
    }
    if (vector_path.empty()) {
        in.vector = walkcert::IntVector::all_ones(in.matrix.dim());
    } else {
        in.vector = walkcert::parse_vector(read_file(vector_path));
        if (in.vector.size() != in.matrix.dim())
            throw walkcert::ParseError("vector dimension does not match matrix");
    }
    return in;
}

walkcert::LoopyGraph load_graph(const std::string& path, const std::string& inline_code) {
    if (!inline_code.empty()) return walkcert::parse_compact(inline_code);
    return walkcert::parse_loopy_adjacency(read_file(path));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifies spectral characterization of graphs with loops via the "
                 "square-free walk-matrix determinant condition"};
    app.require_subcommand(1);

    std::string input_path, second_path, inline_code, vector_path, output_path, primes_arg;
    bool combined = false, long_running = false;
    std::size_t n_arg = 0, samples = 1000;
    std::uint64_t seed = 0;

    auto* certify = app.add_subcommand("certify", "Certify one graph or symmetric matrix");
    certify->add_option("input", input_path, "adjacency/matrix file");
    certify->add_option("--inline", inline_code, "compact n:hex graph encoding");
    certify->add_option("--vector", vector_path, "file with one integer per line");
    certify->add_option("--output", output_path, "write the document here instead of stdout");
    certify->add_flag("--combined", combined, "use the combined discriminant rule");

    auto* mates = app.add_subcommand("mates", "List non-isomorphic cospectral mates");
    mates->add_option("input", input_path, "adjacency file");
    mates->add_option("--inline", inline_code, "compact n:hex graph encoding");
    mates->add_option("--output", output_path, "output path");
    mates->add_flag("--long-running", long_running, "allow the n=6 sweep");

    auto* verify = app.add_subcommand("verify", "Exhaustively verify the certified graphs on n vertices");
    verify->add_option("--n", n_arg, "vertex count")->required();
    verify->add_option("--output", output_path, "output path");
    verify->add_flag("--long-running", long_running, "allow the n=6 sweep");

    auto* frequency = app.add_subcommand("frequency", "Empirical square-free frequency on random graphs");
    frequency->add_option("--n", n_arg, "vertex count")->required();
    frequency->add_option("--samples", samples, "number of random graphs");
    frequency->add_option("--seed", seed, "PRNG seed");
    frequency->add_option("--output", output_path, "output path");

    auto* diagnose = app.add_subcommand("diagnose", "Level/prime trace for a cospectral pair");
    diagnose->add_option("first", input_path, "first adjacency/matrix file")->required();
    diagnose->add_option("second", second_path, "second adjacency/matrix file")->required();
    diagnose->add_option("--vector", vector_path, "vector for the first pair");
    diagnose->add_option("--primes", primes_arg, "comma-separated primes to trace (default: primes of det W)");
    diagnose->add_option("--output", output_path, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) {
            if (input_path.empty() && inline_code.empty())
                throw walkcert::ParseError("certify needs an input file or --inline");
            MatrixInput in = load_input(input_path, inline_code, vector_path);
            walkcert::Certificate cert = combined
                ? walkcert::certify_combined(in.matrix, in.vector)
                : walkcert::certify_walk_det(in.matrix, in.vector);
            cert.input_hash = in.hash;
            write_output(cert.to_document(), output_path);
            return cert.verdict == walkcert::Verdict::Inconclusive ? kExitInconclusive
                                                                   : kExitOk;
        }
        if (mates->parsed()) {
            if (input_path.empty() && inline_code.empty())
                throw walkcert::ParseError("mates needs an input file or --inline");
            walkcert::LoopyGraph g = load_graph(input_path, inline_code);
            std::size_t bound = long_running ? 6 : 5;
            if (g.vertex_count() > bound)
                throw walkcert::TooLarge(
                    g.vertex_count() <= 6
                        ? "n = 6 sweep needs --long-running"
                        : "mates search is limited to n <= 6");
            walkcert::FingerprintIndex idx = walkcert::build_index(g.vertex_count());
            // Deduplicate mates by canonical form: one labeled representative
            // per isomorphism class.
            std::vector<std::string> out;
            std::vector<std::uint64_t> seen;
            for (const walkcert::LoopyGraph& m : walkcert::find_mates(g, idx)) {
                std::uint64_t canon = walkcert::canonical_form(m);
                if (std::find(seen.begin(), seen.end(), canon) == seen.end()) {
                    seen.push_back(canon);
                    out.push_back(m.compact());
                }
            }
            std::ostringstream doc;
            doc << "{\n  \"graph\": \"" << g.compact() << "\",\n  \"mates\": [";
            for (std::size_t i = 0; i < out.size(); ++i)
                doc << (i ? ", " : "") << '"' << out[i] << '"';
            doc << "]\n}\n";
            write_output(doc.str(), output_path);
            return kExitOk;
        }
        if (verify->parsed()) {
            if (n_arg == 6 && !long_running)
                throw walkcert::TooLarge("n = 6 sweep needs --long-running");
            walkcert::VerificationReport rep = walkcert::verify_theorem(n_arg);
            write_output(rep.to_document(), output_path);
            return rep.violations.empty() ? kExitOk : kExitInconclusive;
        }
        if (frequency->parsed()) {
            walkcert::FrequencyReport rep =
                walkcert::satisfaction_frequency(n_arg, samples, seed);
            write_output(rep.to_document(), output_path);
            return kExitOk;
        }
        if (diagnose->parsed()) {
            MatrixInput a = load_input(input_path, "", vector_path);
            MatrixInput b = load_input(second_path, "", "");
            // The second vector defaults to all-ones like the first; an
            // explicit vector applies to the first input only.
            walkcert::Int det =
                walkcert::bareiss_det(walkcert::walk_matrix(a.matrix, a.vector));
            std::vector<std::uint64_t> primes;
            if (!primes_arg.empty()) {
                std::istringstream in(primes_arg);
                std::string tok;
                while (std::getline(in, tok, ',')) primes.push_back(std::stoull(tok));
            } else if (det != 0) {
                for (const auto& [p, e] : walkcert::factor(det).prime_powers)
                    primes.push_back(p.get_ui());
            }
            std::ostringstream doc;
            for (std::uint64_t p : primes)
                doc << walkcert::level_prime_check(a.matrix, a.vector, b.matrix,
                                                   b.vector, p)
                           .to_document();
            write_output(doc.str(), output_path);
            return kExitOk;
        }
    } catch (const walkcert::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
