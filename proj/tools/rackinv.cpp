#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rackinv/cohomology.hpp"
#include "rackinv/coloring.hpp"
#include "rackinv/gauss_code.hpp"
#include "rackinv/invariants.hpp"
#include "rackinv/rack.hpp"

namespace {

using namespace rackinv;

// Exit codes: 0 success, 1 domain refusal, 2 I/O or syntax trouble.
constexpr int kExitDomain = 1;
constexpr int kExitSyntax = 2;
constexpr std::size_t kViolationCap = 50;

struct CliFailure {
    int code;
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliFailure{kExitSyntax, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<int>> parse_rack_file(const std::string& path) {
    ParseError err;
    const auto table = parse_rack_matrix(slurp(path), &err);
    if (!table) throw CliFailure{kExitSyntax, path + ": " + err.describe()};
    return *table;
}

RackTable load_rack(const std::string& path) {
    std::vector<AxiomViolation> bad;
    const auto r = RackTable::validate(parse_rack_file(path), &bad);
    if (!r)
        throw CliFailure{kExitDomain, path + ": invalid rack: " + bad.front().describe()};
    return *r;
}

GaussDiagram load_link(const std::string& path) {
    ParseError err;
    const auto d = GaussDiagram::parse(slurp(path), &err);
    if (!d) throw CliFailure{kExitSyntax, path + ": " + err.describe()};
    return *d;
}

Cochain2 load_cochain(const std::string& path) {
    ParseError err;
    const auto c = parse_cochain(slurp(path), &err);
    if (!c) throw CliFailure{kExitSyntax, path + ": " + err.describe()};
    return *c;
}

std::string paren_vector(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

int run_rack_check(const std::string& path) {
    std::vector<AxiomViolation> bad;
    const auto r = RackTable::validate(parse_rack_file(path), &bad);
    if (!r) {
        std::cout << "invalid rack, " << bad.size()
                  << (bad.size() == 1 ? " violation:" : " violations:") << "\n";
        for (std::size_t i = 0; i < bad.size() && i < kViolationCap; ++i)
            std::cout << "  " << bad[i].describe() << "\n";
        if (bad.size() > kViolationCap)
            std::cout << "  (+" << bad.size() - kViolationCap << " more)\n";
        return kExitDomain;
    }
    const RackProfile p = profile(*r);
    std::cout << "valid rack, n=" << r->size() << ", quandle=" << (p.is_quandle ? "yes" : "no")
              << ", N=" << p.rank << "\n";
    std::cout << "diagonal: " << cycle_notation(p.diagonal) << "\n";
    std::cout << "operator classes:";
    for (const auto& cls : p.operator_classes) {
        std::cout << " {";
        for (std::size_t i = 0; i < cls.size(); ++i)
            std::cout << (i > 0 ? " " : "") << cls[i];
        std::cout << "}";
    }
    std::cout << "\n";
    return 0;
}

int run_rack_cocycles(const std::string& path, int modulus, std::int64_t all_up_to) {
    const RackTable r = load_rack(path);
    const ReducedCocycleModule module = enumerate_reduced_cocycles(r, modulus);

    std::ostringstream out;
    out << "solutions: " << module.solution_count() << "\n";
    out << "generators: " << module.generators.size() << "\n";
    for (std::size_t i = 0; i < module.generators.size(); ++i) {
        out << "# generator " << i + 1 << " (order " << module.orders[i] << ")\n";
        out << write_cochain(module.generators[i]);
    }
    if (all_up_to >= 0) {
        const auto solutions = module.materialize(static_cast<std::uint64_t>(all_up_to));
        for (std::size_t i = 0; i < solutions.size(); ++i) {
            out << "# solution " << i + 1 << "\n";
            out << write_cochain(solutions[i]);
        }
    }
    std::cout << out.str();
    return 0;
}

int run_link_info(const std::string& path) {
    const GaussDiagram d = load_link(path);
    std::cout << "components=" << d.component_count() << ", sw=" << paren_vector(d.self_writhe());
    for (int i = 1; i <= d.component_count(); ++i)
        for (int j = i + 1; j <= d.component_count(); ++j) {
            const auto lk = d.linking_number(i, j);
            std::cout << ", lk(" << i << "," << j << ")=";
            if (lk) std::cout << *lk;
            else std::cout << "n/a";
        }
    std::cout << ", arcs=" << arcs(d).arc_count << "\n";
    return 0;
}

int run_invariant(const std::string& kind, const std::string& rack_path,
                  const std::string& link_path, const std::string& cocycle_path, bool quiet) {
    const RackTable r = load_rack(rack_path);
    const GaussDiagram d = load_link(link_path);

    if (kind == "ir") {
        std::cout << integer_counting(d, r) << "\n";
        return 0;
    }
    if (kind == "pr") {
        const QPolynomial p = polynomial_counting(d, r);
        std::cout << p.to_string() << "\n";
        if (!quiet) std::cout << p.machine_block();
        return 0;
    }
    if (cocycle_path.empty())
        throw CliFailure{kExitSyntax, "invariant phi needs --cocycle <file>"};
    const Cochain2 phi = load_cochain(cocycle_path);
    std::string error;
    const auto p = cocycle_invariant(d, r, phi, &error);
    if (!p) throw CliFailure{kExitDomain, error};
    std::cout << p->to_string() << "\n";
    if (!quiet) std::cout << p->machine_block();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rack counting and cocycle invariants of classical and virtual links"};
    app.require_subcommand(1);

    std::string rack_path;
    std::string link_path;
    std::string cocycle_path;
    std::string kind;
    int modulus = 2;
    std::int64_t all_up_to = -1;
    bool quiet = false;

    CLI::App* rack_check = app.add_subcommand("rack-check", "validate a rack table and report its profile");
    rack_check->add_option("rack", rack_path, "rack table file")->required();

    CLI::App* rack_cocycles =
        app.add_subcommand("rack-cocycles", "enumerate reduced 2-cocycles over Z_m");
    rack_cocycles->add_option("rack", rack_path, "rack table file")->required();
    rack_cocycles->add_option("--mod", modulus, "coefficient modulus (at least 2)")
        ->required()
        ->check(CLI::Range(2, 1000000));
    rack_cocycles
        ->add_option("--all-up-to", all_up_to, "also list up to this many solutions")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000000}));

    CLI::App* link_info = app.add_subcommand("link-info", "summarize a Gauss code");
    link_info->add_option("link", link_path, "Gauss code file")->required();

    CLI::App* invariant =
        app.add_subcommand("invariant", "compute ir, pr, or phi for a rack and a link");
    invariant->add_option("kind", kind, "one of ir, pr, phi")
        ->required()
        ->check(CLI::IsMember({"ir", "pr", "phi"}));
    invariant->add_option("rack", rack_path, "rack table file")->required();
    invariant->add_option("link", link_path, "Gauss code file")->required();
    invariant->add_option("--cocycle", cocycle_path, "reduced 2-cocycle file (phi only)");
    invariant->add_flag("--quiet", quiet, "print the polynomial line only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitSyntax;
    }

    try {
        if (rack_check->parsed()) return run_rack_check(rack_path);
        if (rack_cocycles->parsed()) return run_rack_cocycles(rack_path, modulus, all_up_to);
        if (link_info->parsed()) return run_link_info(link_path);
        if (invariant->parsed())
            return run_invariant(kind, rack_path, link_path, cocycle_path, quiet);
    } catch (const CliFailure& f) {
        std::cerr << f.message << "\n";
        return f.code;
    }
    return 0;
}
