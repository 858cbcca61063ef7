// camring: exact computations with cameral-cover cohomology rings of
// rational reflection groups and central hyperplane arrangements.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "camring/digest.hpp"
#include "camring/json_io.hpp"
#include "camring/version.hpp"

using namespace camring;

namespace {

struct JobSpec {
    std::string input_file;
    std::string weyl_spec;
    std::string command;
    int max_degree = 8;
    std::string coeff = "Q";
    std::string convention = "default";
    std::string out_file;

    std::string space = "M";     // betti: C|M; higgs-betti: HC|H
    std::string datum = "";      // higgs-betti: sl2|sl3|file path
    std::string lhs, rhs;        // mul: ring element JSON or @file
    int flat = -1;               // induce
    std::vector<int> check;      // whitney --check Y Z
    int n = 0;                   // partitions
    std::string lambda1, lambda2; // structure-constants
    int degree = 0;              // invariants
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string inline_or_file(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@')
        return read_file(arg.substr(1));
    return arg;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError("bad JSON in " + what + ": " + e.what());
    }
}

Coeff coeff_of(const JobSpec& job) {
    if (job.coeff == "Q")
        return Coeff::Q;
    if (job.coeff == "Z")
        return Coeff::Z;
    throw ValidationError("--coeff must be Q or Z");
}

int even_degree(const JobSpec& job) {
    if (job.max_degree < 0 || job.max_degree % 2 != 0)
        throw ValidationError("--max-degree must be even and nonnegative");
    if (job.max_degree > 40)
        throw ValidationError("--max-degree exceeds the configured maximum of 40");
    return job.max_degree;
}

struct LoadedInput {
    Input input;
    IntersectionPoset poset;
    std::string source;
    std::string source_hash;
};

LoadedInput load_input(const JobSpec& job) {
    if (!job.input_file.empty() && !job.weyl_spec.empty())
        throw ValidationError("exactly one input source: --input or --weyl");
    if (!job.weyl_spec.empty()) {
        Input in;
        in.group = weyl_from_spec(job.weyl_spec);
        IntersectionPoset poset(in.group->mirror_arrangement());
        return LoadedInput{std::move(in), std::move(poset), "builtin:" + job.weyl_spec,
                           sha256_hex(job.weyl_spec)};
    }
    if (job.input_file.empty())
        throw ValidationError("an input is required: --input FILE or --weyl FAMILY:RANK");
    std::string text = read_file(job.input_file);
    Input in = input_from_json(parse_json(text, job.input_file));
    IntersectionPoset poset(in.arr());
    return LoadedInput{std::move(in), std::move(poset), "file:" + job.input_file, sha256_hex(text)};
}

const ReflectionGroup& require_group(const LoadedInput& li) {
    if (!li.input.group)
        throw ValidationError("this command needs a reflection group input");
    return *li.input.group;
}

Json manifest(const JobSpec& job, const std::string& source, const std::string& hash) {
    Json m;
    m["version"] = kVersion;
    m["command"] = job.command;
    m["input"] = source;
    m["input_sha256"] = hash;
    m["coeff"] = job.coeff;
    m["convention"] = job.convention;
    m["max_degree"] = job.max_degree;
    return m;
}

RootDatum load_datum(const JobSpec& job) {
    Rat scale = job.convention == "paper-sl2" ? Rat(2) : Rat(1);
    if (job.datum == "sl2")
        return RootDatum::sl2(scale);
    if (job.datum == "sl3")
        return RootDatum::sl3(scale);
    if (job.datum.empty())
        throw ValidationError("--datum is required: sl2, sl3 or a JSON file");
    Json j = parse_json(read_file(job.datum), job.datum);
    return datum_from_json(j);
}

Json run_command(const JobSpec& job) {
    if (job.command == "higgs-betti") {
        RootDatum datum = load_datum(job);
        Json out;
        out["manifest"] = manifest(job, job.datum, sha256_hex(job.datum));
        std::vector<unsigned long long> dims = job.space == "HC"
                                                   ? hc_betti(datum, even_degree(job))
                                                   : h_betti(datum, even_degree(job));
        out["dims"] = dims;
        return out;
    }

    if (job.command == "partitions") {
        if (job.n < 1)
            throw ValidationError("--n must be positive");
        Json out;
        out["manifest"] = manifest(job, "n=" + std::to_string(job.n), sha256_hex(std::to_string(job.n)));
        out["n"] = job.n;
        Json by_degree = Json::array();
        for (int k = 0; 2 * k <= even_degree(job); ++k) {
            Json bucket = Json::array();
            for (const WeightedPartition& p : weighted_partitions_of(job.n, static_cast<unsigned long>(k)))
                bucket.push_back(partition_to_json(p));
            by_degree.push_back(std::move(bucket));
        }
        out["partitions_by_degree"] = std::move(by_degree);
        return out;
    }

    if (job.command == "structure-constants") {
        if (job.n < 1)
            throw ValidationError("--n must be positive");
        WeightedPartition l1 = partition_from_json(parse_json(inline_or_file(job.lambda1), "--lambda1"));
        WeightedPartition l2 = partition_from_json(parse_json(inline_or_file(job.lambda2), "--lambda2"));
        Json out;
        out["manifest"] = manifest(job, "n=" + std::to_string(job.n),
                                   sha256_hex(job.lambda1 + "|" + job.lambda2));
        out["lambda1"] = partition_to_json(l1);
        out["lambda2"] = partition_to_json(l2);
        Json terms = Json::array();
        for (const auto& [p, c] : multiply_partitions(l1, l2, job.n)) {
            Json t;
            t["lambda"] = partition_to_json(p);
            t["N"] = c;
            terms.push_back(std::move(t));
        }
        out["terms"] = std::move(terms);
        return out;
    }

    LoadedInput li = load_input(job);
    Json out;
    out["manifest"] = manifest(job, li.source, li.source_hash);

    if (job.command == "poset") {
        Json p = poset_to_json(li.poset);
        for (auto& [key, value] : p.items())
            out[key] = value;
        return out;
    }

    if (job.command == "components") {
        const Arrangement& arr = li.input.arr();
        std::vector<int> all(arr.size());
        for (size_t i = 0; i < arr.size(); ++i)
            all[i] = static_cast<int>(i);
        out["components"] = matroid_components(arr, all);
        out["is_irreducible"] = is_irreducible(arr);
        out["codim"] = arr.codim();
        out["essential"] = arr.essential();
        auto [ess, proj] = essentialize(arr);
        Json e;
        e["ambient_dim"] = ess.ambient_dim;
        Json normals = Json::array();
        for (const auto& n : ess.normals) {
            Json row = Json::array();
            for (const Rat& x : n)
                row.push_back(rat_to_string(x));
            normals.push_back(std::move(row));
        }
        e["hyperplanes"] = std::move(normals);
        Json pm = Json::array();
        for (int i = 0; i < proj.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < proj.cols(); ++j)
                row.push_back(rat_to_string(proj.at(i, j)));
            pm.push_back(std::move(row));
        }
        e["quotient_map"] = std::move(pm);
        out["essentialization"] = std::move(e);
        return out;
    }

    if (job.command == "strata") {
        const ReflectionGroup& g = require_group(li);
        Json strata = Json::array();
        for (const PointClass& pc : point_classification(li.poset, g)) {
            Json s;
            s["flat"] = pc.info.flat;
            s["orbit"] = pc.orbit;
            s["torus_rank"] = pc.info.torus_rank;
            s["component_group_order"] = pc.info.component_group_order;
            s["codim"] = pc.info.codim;
            strata.push_back(std::move(s));
        }
        out["strata"] = std::move(strata);
        return out;
    }

    if (job.command == "betti") {
        Json b;
        b["space"] = job.space;
        if (job.space == "C")
            b["dims"] = betti_C(li.poset, even_degree(job));
        else if (job.space == "M") {
            if (coeff_of(job) == Coeff::Z)
                throw ValidationError("betti --space M needs rational coefficients (#W invertible)");
            b["dims"] = betti_M(li.poset, require_group(li), even_degree(job));
        } else
            throw ValidationError("--space must be C or M");
        out["space"] = b["space"];
        out["dims"] = b["dims"];
        return out;
    }

    if (job.command == "mul") {
        RingElement a = ring_from_json(li.poset, parse_json(inline_or_file(job.lhs), "--lhs"));
        RingElement b = ring_from_json(li.poset, parse_json(inline_or_file(job.rhs), "--rhs"));
        if (coeff_of(job) == Coeff::Z) {
            a.coeff = Coeff::Z;
            b.coeff = Coeff::Z;
            for (const auto& [e, c] : a.combo)
                if (!rat_is_integer(c))
                    throw ValidationError("lhs has non-integer coefficients");
            for (const auto& [e, c] : b.combo)
                if (!rat_is_integer(c))
                    throw ValidationError("rhs has non-integer coefficients");
        }
        out["result"] = ring_to_json(ring_multiply(li.poset, a, b));
        return out;
    }

    if (job.command == "invariants") {
        if (job.degree % 2 != 0 || job.degree < 0 || job.degree > 40)
            throw ValidationError("--degree must be even, nonnegative and at most 40");
        Json elems = Json::array();
        for (const RingElement& x : invariant_basis(li.poset, require_group(li), job.degree, coeff_of(job)))
            elems.push_back(ring_to_json(x));
        out["degree"] = job.degree;
        out["elements"] = std::move(elems);
        return out;
    }

    if (job.command == "induce") {
        if (job.flat < 0 || job.flat >= li.poset.size())
            throw ValidationError("--flat must name a flat of the poset");
        InducedRestriction ind = restriction_to_induced(li.poset, job.flat);
        out["flat"] = job.flat;
        out["target_hyperplanes"] = ind.hyperplane_to_parent;
        Json fm = Json::array();
        for (size_t s = 0; s < ind.sub_to_parent.size(); ++s)
            fm.push_back(Json::array({ind.sub_to_parent[s], static_cast<int>(s)}));
        out["flat_map"] = std::move(fm);
        Json kernel = Json::array();
        auto by_degree = enumerate_by_degree(li.poset, even_degree(job));
        for (const auto& bucket : by_degree)
            for (const MonoidElement& e : bucket)
                if (ind.kills(li.poset, e))
                    kernel.push_back(monoid_to_json(e));
        out["kernel_basis"] = std::move(kernel);
        return out;
    }

    if (job.command == "whitney") {
        if (!job.check.empty()) {
            if (job.check.size() != 2)
                throw ValidationError("--check takes two flat ids");
            out["check"] = Json{{"Y", job.check[0]},
                                {"Z", job.check[1]},
                                {"equal", whitney_check(li.poset, job.check[0], job.check[1])}};
            return out;
        }
        Json coeffs = Json::array();
        for (const RingElement& c : whitney_polynomial(li.poset))
            coeffs.push_back(ring_to_json(c));
        out["p"] = std::move(coeffs);
        return out;
    }

    if (job.command == "point-classification") {
        const ReflectionGroup& g = require_group(li);
        auto classes = point_classification(li.poset, g);
        out["classes"] = classes.size();
        Json orbits = Json::array();
        for (const PointClass& pc : classes) {
            Json o;
            o["representative"] = pc.info.flat;
            o["size"] = pc.orbit.size();
            o["torus_rank"] = pc.info.torus_rank;
            o["component_group_order"] = pc.info.component_group_order;
            o["codim"] = pc.info.codim;
            orbits.push_back(std::move(o));
        }
        out["orbits"] = std::move(orbits);
        return out;
    }

    if (job.command == "validate") {
        Json diags = Json::array();
        if (li.input.group && !li.input.group->reflection_generated())
            diags.push_back(Json{{"level", "warning"},
                                 {"message", "group is not generated by its reflections"}});
        out["diagnostics"] = std::move(diags);
        return out;
    }

    throw ValidationError("unknown command '" + job.command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology rings of cameral covers and Higgs bundles"};
    JobSpec job;
    app.add_option("--input", job.input_file, "arrangement or group JSON file");
    app.add_option("--weyl", job.weyl_spec, "builtin Weyl group, e.g. A:2, B:3, D:4");
    app.add_option("--command", job.command, "one of: poset, components, strata, betti, mul, "
                                             "invariants, induce, whitney, partitions, "
                                             "structure-constants, point-classification, "
                                             "higgs-betti, validate")
        ->required();
    app.add_option("--max-degree", job.max_degree, "top cohomological degree (even, default 8)");
    app.add_option("--coeff", job.coeff, "coefficient ring: Q or Z");
    app.add_option("--convention", job.convention, "default or paper-sl2");
    app.add_option("--out", job.out_file, "write the JSON document here instead of stdout");
    app.add_option("--space", job.space, "betti: C or M; higgs-betti: HC or H");
    app.add_option("--datum", job.datum, "higgs-betti: sl2, sl3 or a root-datum JSON file");
    app.add_option("--lhs", job.lhs, "mul: ring element JSON (or @file)");
    app.add_option("--rhs", job.rhs, "mul: ring element JSON (or @file)");
    app.add_option("--flat", job.flat, "induce: flat id");
    app.add_option("--check", job.check, "whitney: two flat ids Y Z")->expected(2);
    app.add_option("--n", job.n, "partitions / structure-constants: the n of Σn");
    app.add_option("--lambda1", job.lambda1, "structure-constants: weighted partition JSON");
    app.add_option("--lambda2", job.lambda2, "structure-constants: weighted partition JSON");
    app.add_option("--degree", job.degree, "invariants: the degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Json out = run_command(job);
        std::string text = out.dump(2) + "\n";
        if (!job.out_file.empty()) {
            std::ofstream f(job.out_file, std::ios::binary);
            if (!f)
                throw ValidationError("cannot write: " + job.out_file);
            f << text;
        } else {
            std::cout << text;
        }
        return 0;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
