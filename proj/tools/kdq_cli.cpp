// Copyright 2026 The kdq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// kdq: command-line front end over the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kdq/kdq.h"

namespace {

struct CliError {
    int code;
    std::string message;
};

struct MatrixDeleter {
    void operator()(kdq_matrix* m) const { kdq_matrix_free(m); }
};
struct VectorDeleter {
    void operator()(kdq_vector* v) const { kdq_vector_free(v); }
};
using MatrixPtr = std::unique_ptr<kdq_matrix, MatrixDeleter>;
using VectorPtr = std::unique_ptr<kdq_vector, VectorDeleter>;

void check(kdq_status st) {
    if (st != KDQ_OK) throw CliError{st, kdq_last_error()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{KDQ_ERR_DATA, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CliError{KDQ_ERR_USAGE, "bad index list: " + text};
        }
    }
    if (out.empty()) throw CliError{KDQ_ERR_USAGE, "empty index list"};
    return out;
}

struct Options {
    std::string matrix_path;
    std::vector<int> dft_value;
    CLI::App* active = nullptr;
    int d = 0;
    std::string state_path;
    std::string sa;
    std::string sb;
    std::string vectors_path;
    std::string out_path;
    kdq_tolerances tol{};
    std::uint64_t seed = 0;
    int max_d = 8;
    bool allow_override = false;
    int trials = 0;
    bool split = false;
};

int dft_dimension(const Options& o) {
    // a bare --dft leaves a 0 placeholder
    if (!o.dft_value.empty() && o.dft_value.front() > 0) return o.dft_value.front();
    if (o.d > 0) return o.d;
    throw CliError{KDQ_ERR_USAGE, "--dft needs a dimension (--dft N or --d N)"};
}

MatrixPtr load_matrix(const Options& o) {
    kdq_matrix* m = nullptr;
    const bool dft = o.active->get_option("--dft")->count() > 0;
    if (dft == !o.matrix_path.empty()) {
        throw CliError{KDQ_ERR_USAGE, "give exactly one of --matrix PATH or --dft N"};
    }
    if (dft) {
        check(kdq_matrix_dft(dft_dimension(o), &m));
    } else {
        check(kdq_matrix_from_json(read_file(o.matrix_path).c_str(), &o.tol, &m));
    }
    return MatrixPtr(m);
}

VectorPtr load_state(const Options& o) {
    if (o.state_path.empty()) throw CliError{KDQ_ERR_USAGE, "--state PATH is required"};
    kdq_vector* v = nullptr;
    check(kdq_vector_from_json(read_file(o.state_path).c_str(), &v));
    return VectorPtr(v);
}

void write_output(const Options& o, char* text) {
    std::unique_ptr<char, void (*)(char*)> owned(text, kdq_string_free);
    if (o.out_path.empty()) {
        std::fputs(text, stdout);
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary | std::ios::trunc);
    if (out) out << text;
    if (!out || !out.flush()) {
        throw CliError{KDQ_ERR_CANT_CREATE, "cannot write " + o.out_path};
    }
}

void add_matrix_options(CLI::App* sub, Options& o) {
    sub->add_option("--matrix", o.matrix_path, "transition matrix JSON file");
    sub->add_option("--dft", o.dft_value, "use the DFT matrix of dimension N")->expected(0, 1);
    sub->add_option("--d", o.d, "dimension for a bare --dft");
}

void add_common_options(CLI::App* sub, Options& o) {
    sub->add_option("--tol-zero", o.tol.eps_zero, "zero threshold");
    sub->add_option("--tol-angle", o.tol.eps_angle, "phase congruence threshold");
    sub->add_option("--tol-unitary", o.tol.eps_unitary, "unitarity threshold");
    sub->add_option("--tol-eig", o.tol.eps_eig, "eigenvalue and residual threshold");
    sub->add_option("--out", o.out_path, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirkwood-Dirac quasiprobability toolkit"};
    app.require_subcommand(1);
    Options o;
    kdq_tolerances_default(&o.tol);

    auto* table = app.add_subcommand("table", "KD table and marginals");
    auto* classify = app.add_subcommand("classify", "KD classicality verdict");
    auto* blocks = app.add_subcommand("blocks", "block decomposition and rank checks");
    auto* cluster = app.add_subcommand("cluster", "cluster a vector family");
    auto* witness = app.add_subcommand("witness", "zero-count nonclassicality witnesses");
    auto* oracle = app.add_subcommand("oracle", "exhaustive support-pair search");
    auto* verify = app.add_subcommand("verify", "build a classical state on given supports");
    auto* dft_enum = app.add_subcommand("dft-enum", "catalog of classical DFT states");

    for (CLI::App* sub : {table, classify, blocks, witness, oracle, verify}) {
        add_matrix_options(sub, o);
    }
    for (CLI::App* sub : {table, classify, blocks, cluster, witness, oracle, verify, dft_enum}) {
        add_common_options(sub, o);
    }
    for (CLI::App* sub : {table, classify, blocks, witness}) {
        sub->add_option("--state", o.state_path, "state JSON file");
    }
    for (CLI::App* sub : {blocks, verify}) {
        sub->add_option("--sa", o.sa, "A support, comma separated");
        sub->add_option("--sb", o.sb, "B support, comma separated");
    }
    cluster->add_option("--vectors", o.vectors_path, "vector family JSON file")->required();
    oracle->add_option("--max-d", o.max_d, "largest dimension searched without --override");
    oracle->add_flag("--override", o.allow_override, "search above --max-d (up to 10)");
    oracle->add_option("--trials", o.trials, "witness soundness sweep size");
    oracle->add_option("--seed", o.seed, "sweep seed");
    oracle->add_flag("--split", o.split, "sweep direct summands of a decomposable matrix");
    dft_enum->add_option("--dft", o.dft_value, "dimension")->expected(0, 1);
    dft_enum->add_option("--d", o.d, "dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : KDQ_ERR_USAGE;
    }

    for (CLI::App* sub : app.get_subcommands()) o.active = sub;

    try {
        char* text = nullptr;
        if (table->parsed()) {
            const MatrixPtr m = load_matrix(o);
            const VectorPtr v = load_state(o);
            check(kdq_table_json(m.get(), v.get(), &text));
        } else if (classify->parsed()) {
            const MatrixPtr m = load_matrix(o);
            const VectorPtr v = load_state(o);
            check(kdq_classify_json(m.get(), v.get(), &o.tol, &text));
        } else if (blocks->parsed()) {
            const MatrixPtr m = load_matrix(o);
            VectorPtr v;
            if (!o.state_path.empty()) v = load_state(o);
            if (o.sa.empty() != o.sb.empty()) {
                throw CliError{KDQ_ERR_USAGE, "--sa and --sb go together"};
            }
            if (!o.sa.empty()) {
                const std::vector<int> sa = parse_list(o.sa);
                const std::vector<int> sb = parse_list(o.sb);
                check(kdq_blocks_json(m.get(), v.get(), sa.data(), static_cast<int>(sa.size()),
                                      sb.data(), static_cast<int>(sb.size()), &o.tol, &text));
            } else {
                check(kdq_blocks_json(m.get(), v.get(), nullptr, 0, nullptr, 0, &o.tol, &text));
            }
        } else if (cluster->parsed()) {
            check(kdq_cluster_json(read_file(o.vectors_path).c_str(), &o.tol, &text));
        } else if (witness->parsed()) {
            const MatrixPtr m = load_matrix(o);
            const VectorPtr v = load_state(o);
            check(kdq_witness_json(m.get(), v.get(), &o.tol, &text));
        } else if (oracle->parsed()) {
            const MatrixPtr m = load_matrix(o);
            double elapsed = 0.0;
            check(kdq_oracle_json(m.get(), &o.tol, o.max_d, o.allow_override ? 1 : 0, o.trials,
                                  o.seed, o.split ? 1 : 0, &text, &elapsed));
            std::fprintf(stderr, "oracle: search took %.3f s\n", elapsed);
        } else if (verify->parsed()) {
            const MatrixPtr m = load_matrix(o);
            if (o.sa.empty() || o.sb.empty()) {
                throw CliError{KDQ_ERR_USAGE, "verify needs --sa and --sb"};
            }
            const std::vector<int> sa = parse_list(o.sa);
            const std::vector<int> sb = parse_list(o.sb);
            check(kdq_verify_json(m.get(), sa.data(), static_cast<int>(sa.size()), sb.data(),
                                  static_cast<int>(sb.size()), &o.tol, &text));
        } else if (dft_enum->parsed()) {
            const int d = !o.dft_value.empty() && o.dft_value.front() > 0 ? o.dft_value.front() : o.d;
            if (d < 1) throw CliError{KDQ_ERR_USAGE, "dft-enum needs --d N"};
            check(kdq_dft_enum_json(d, &o.tol, &text));
        }
        write_output(o, text);
    } catch (const CliError& e) {
        std::fprintf(stderr, "kdq: %s\n", e.message.c_str());
        return e.code;
    }
    return 0;
}
