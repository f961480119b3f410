#include "latt/report.hpp"

#include <sstream>

#include "latt/errors.hpp"
#include "latt/functional.hpp"

namespace latt {

Json analyze_report(const Json& input) {
    Subspace y = subspace_from_json(input);
    const auto& labels = y.labels();
    const std::size_t n = labels.size();

    Subspace closure = sublattice_closure(y);
    bool sublattice = closure == y;
    ConstraintSet cs = constraint_set(y);
    ClanDecomposition cd = clan_decomposition(y);

    // The sublattice-only views describe the closure; for a sublattice
    // input that is the input itself.
    std::vector<Constraint> factors = factor_into_codim1(closure);
    IdealDescriptor largest = largest_ideal_in(closure);
    std::size_t census = unit_vector_census(closure);
    const std::size_t m = closure.codim();

    Json report = Json::object();
    report["labels"] = labels;
    report["basis"] = matrix_to_json(y.basis());
    report["codimension"] = y.codim();
    report["is_sublattice"] = sublattice;
    report["closure"] = matrix_to_json(closure.basis());
    // the ideal bound and census below are stated for the closure
    report["closure_codimension"] = m;
    report["constraints"] = constraints_to_json(cs);

    auto opt_ideal = is_ideal(y);
    report["is_ideal"] = opt_ideal ? ideal_to_json(*opt_ideal) : Json();

    Json clans = Json::object();
    Json kernel_labels = Json::array();
    for (std::size_t i : cd.kernel)
        kernel_labels.push_back(labels[i]);
    clans["kernel"] = std::move(kernel_labels);
    Json clan_list = Json::array();
    for (const auto& clan : cd.clans) {
        Json members = Json::array();
        for (std::size_t i : clan)
            members.push_back(labels[i]);
        clan_list.push_back(std::move(members));
    }
    clans["clans"] = std::move(clan_list);
    Json gens = Json::array();
    for (const auto& g : cd.generators)
        gens.push_back(coords_to_json(labels, g.values));
    clans["generators"] = std::move(gens);
    report["clans"] = std::move(clans);

    Json dpb = Json::array();
    for (const auto& g : disjoint_positive_basis(closure))
        dpb.push_back(coords_to_json(labels, g.values));
    report["disjoint_positive_basis"] = std::move(dpb);

    report["codim1_factors"] = constraints_to_json(labels, factors);

    Json largest_json = ideal_to_json(largest);
    largest_json["codim"] = largest.codim();
    largest_json["bound"] = 2 * m;
    largest_json["within_bound"] = largest.codim() <= 2 * m;
    report["largest_ideal"] = std::move(largest_json);

    Json census_json = Json::object();
    census_json["count"] = census;
    census_json["lower"] = static_cast<long long>(n) - 2 * static_cast<long long>(m);
    census_json["upper"] = static_cast<long long>(n) - static_cast<long long>(m);
    census_json["within_bounds"] =
        static_cast<long long>(census) >= static_cast<long long>(n) - 2 * static_cast<long long>(m) &&
        census <= n - m;
    report["unit_vector_census"] = std::move(census_json);

    if (largest.zero_set.empty()) {
        report["quotient"] = Json();
    } else {
        auto [quotient_lattice, qmap] = quotient_by_ideal(largest);
        Json q = Json::object();
        q["labels"] = quotient_lattice.labels();
        q["map"] = matrix_to_json(qmap);
        report["quotient"] = std::move(q);
    }
    return report;
}

namespace {

Functional functional_from_input(const Json& input) {
    if (!input.is_object() || !input.contains("labels") || !input.contains("coefficients"))
        throw ParseError("expected an object with \"labels\" and \"coefficients\"");
    std::vector<std::string> labels;
    for (const auto& l : input["labels"]) {
        if (!l.is_string())
            throw ParseError("labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    FiniteVectorLattice lattice(labels);
    RatVector coeffs = coords_from_json(labels, input["coefficients"]);
    return Functional(std::move(lattice), std::move(coeffs));
}

} // namespace

Json classify_report(const Json& input) {
    Functional phi = functional_from_input(input);
    const auto& labels = phi.lattice.labels();
    FunctionalClassification c = classify(phi);

    Json report = Json::object();
    Json cls = Json::object();
    cls["is_positive"] = c.is_positive;
    cls["is_negative"] = c.is_negative;
    cls["is_lattice_homomorphism"] = c.is_lattice_homomorphism;
    cls["is_diff_of_two_homomorphisms"] = c.is_diff_of_two_homomorphisms;
    cls["is_disjointness_preserving"] = c.is_disjointness_preserving;
    cls["support_size"] = c.support_size;
    if (c.homomorphism_parts) {
        Json parts = Json::object();
        parts["plus"] = coords_to_json(labels, c.homomorphism_parts->first.coefficients);
        parts["minus"] = coords_to_json(labels, c.homomorphism_parts->second.coefficients);
        cls["homomorphism_parts"] = std::move(parts);
    } else {
        cls["homomorphism_parts"] = Json();
    }
    report["classification"] = std::move(cls);

    KernelResult kr = kernel_subspace(phi);
    Json kernel = Json::object();
    kernel["basis"] = matrix_to_json(kr.kernel.basis());
    kernel["codimension"] = kr.kernel.codim();
    kernel["zero_functional"] = kr.zero_functional;
    bool kernel_sublattice = is_sublattice(kr.kernel);
    kernel["is_sublattice"] = kernel_sublattice;
    auto kernel_ideal = is_ideal(kr.kernel);
    kernel["is_ideal"] = kernel_ideal ? ideal_to_json(*kernel_ideal) : Json();
    report["kernel"] = std::move(kernel);

    if (phi.is_zero()) {
        report["fullness"] = Json();
    } else {
        auto [full, witness] = is_full_codim1(phi);
        Json fullness = Json::object();
        fullness["is_full"] = full;
        if (witness) {
            Json w = Json::object();
            w["s"] = witness->s;
            w["t"] = witness->t;
            w["x"] = coords_to_json(labels, witness->x.values);
            w["y"] = coords_to_json(labels, witness->y.values);
            w["combo"] = coords_to_json(labels, witness->combo.values);
            w["z"] = coords_to_json(labels, witness->z.values);
            fullness["witness"] = std::move(w);
        } else {
            fullness["witness"] = Json();
        }
        report["fullness"] = std::move(fullness);
    }

    report["max_disjoint_nonvanishing"] = max_disjoint_nonvanishing(phi);

    Json consistency = Json::object();
    consistency["kernel_sublattice_matches_diff_flag"] =
        kernel_sublattice == c.is_diff_of_two_homomorphisms;
    consistency["kernel_ideal_matches_hom_flag"] =
        kernel_ideal.has_value() == (c.support_size <= 1);
    report["consistency"] = std::move(consistency);
    return report;
}

Json pl_demo_report(std::size_t n) {
    PLFunction f0 = PLFunction::identity();
    PLFunction one = PLFunction::constant(Rational(1));
    PLFunction w = counterexample_witness(n);
    PLFunction residue = pl_linear(Rational(1), f0, Rational(-1), w);
    auto norm = pl_e_norm(residue, one);
    Rational expected(1, BigInt(n));

    Json report = Json::object();
    report["n"] = n;
    report["witness"] = pl_to_json(w);
    report["vanishes_near_zero"] = vanishes_near_zero(w);
    report["f0_minus_witness"] = pl_to_json(residue);
    report["norm"] = norm ? Json(norm->str()) : Json("inf");
    report["norm_equals_one_over_n"] = norm.has_value() && *norm == expected;
    report["f0_in_ideal"] = vanishes_near_zero(f0);
    report["witness_in_ideal"] = vanishes_near_zero(w);
    return report;
}

Json oracle_check_report(const OracleSweep& sweep, std::uint64_t seed, std::size_t max_dim) {
    Json report = Json::object();
    report["seed"] = seed;
    report["cases"] = sweep.cases;
    report["max_dim"] = max_dim;
    report["agreements"] = sweep.agreements;
    report["mismatches"] = sweep.cases - sweep.agreements;
    if (sweep.first_mismatch) {
        const auto& m = *sweep.first_mismatch;
        Json mm = Json::object();
        mm["case"] = m.case_index;
        mm["ambient"] = m.ambient;
        mm["dimension"] = m.dimension;
        mm["input"] = subspace_to_json(m.input);
        mm["engine"] = matrix_to_json(m.engine.basis());
        mm["oracle"] = matrix_to_json(m.oracle.basis());
        report["first_mismatch"] = std::move(mm);
    } else {
        report["first_mismatch"] = Json();
    }
    return report;
}

std::string analyze_text(const Json& r) {
    std::ostringstream os;
    os << "labels: " << r["labels"].dump() << "\n"
       << "codimension: " << r["codimension"] << "\n"
       << "is_sublattice: " << r["is_sublattice"] << "\n"
       << "is_ideal: " << r["is_ideal"].dump() << "\n"
       << "constraints: " << r["constraints"].dump() << "\n"
       << "clans: " << r["clans"]["clans"].dump() << " kernel: " << r["clans"]["kernel"].dump()
       << "\n"
       << "largest_ideal: " << r["largest_ideal"].dump() << "\n"
       << "unit_vector_census: " << r["unit_vector_census"].dump() << "\n";
    return os.str();
}

std::string classify_text(const Json& r) {
    std::ostringstream os;
    os << "classification: " << r["classification"].dump() << "\n"
       << "kernel: codim " << r["kernel"]["codimension"] << ", sublattice "
       << r["kernel"]["is_sublattice"] << ", ideal " << r["kernel"]["is_ideal"].dump() << "\n"
       << "fullness: " << r["fullness"].dump() << "\n"
       << "max_disjoint_nonvanishing: " << r["max_disjoint_nonvanishing"] << "\n";
    return os.str();
}

std::string pl_demo_text(const Json& r) {
    std::ostringstream os;
    os << "witness: " << r["witness"].dump() << "\n"
       << "vanishes_near_zero: " << r["vanishes_near_zero"] << "\n"
       << "norm |f0 - w|_1: " << r["norm"] << "\n";
    return os.str();
}

std::string oracle_check_text(const Json& r) {
    std::ostringstream os;
    os << r["agreements"] << "/" << r["cases"] << " agree";
    if (r["mismatches"].get<std::size_t>() != 0)
        os << ", first mismatch: " << r["first_mismatch"].dump();
    os << "\n";
    return os.str();
}

} // namespace latt
