#include "camring/json_io.hpp"

#include "camring/errors.hpp"

namespace camring {

namespace {

std::vector<Rat> rat_vector(const Json& j) {
    if (!j.is_array())
        throw ValidationError("expected an array of rational strings");
    std::vector<Rat> out;
    for (const Json& x : j) {
        if (x.is_number_integer())
            out.push_back(Rat(static_cast<long>(x.get<long long>())));
        else if (x.is_string())
            out.push_back(rat_from_string(x.get<std::string>()));
        else
            throw ValidationError("rationals must be strings or integers");
    }
    return out;
}

} // namespace

Arrangement arrangement_from_json(const Json& j) {
    if (!j.contains("ambient_dim") || !j.contains("hyperplanes"))
        throw ValidationError("arrangement document needs 'ambient_dim' and 'hyperplanes'");
    int dim = j.at("ambient_dim").get<int>();
    if (dim < 0)
        throw ValidationError("ambient_dim must be nonnegative");
    std::vector<std::vector<Rat>> normals;
    for (const Json& h : j.at("hyperplanes"))
        normals.push_back(rat_vector(h));
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const Json& l : j.at("labels"))
            labels.push_back(l.get<std::string>());
    return Arrangement::from_normals(dim, std::move(normals), std::move(labels));
}

ReflectionGroup weyl_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ValidationError("weyl spec must look like A:2, B:3 or D:4");
    std::string family = spec.substr(0, colon);
    int rank = 0;
    try {
        rank = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw ValidationError("bad rank in weyl spec '" + spec + "'");
    }
    if (family == "A")
        return ReflectionGroup::symmetric(rank + 1);
    if (family == "B")
        return ReflectionGroup::signed_permutation(rank);
    if (family == "D")
        return ReflectionGroup::even_signed(rank);
    throw ValidationError("unknown weyl family '" + family + "'");
}

Input input_from_json(const Json& j) {
    Input in;
    if (j.contains("weyl")) {
        const Json& w = j.at("weyl");
        in.group = weyl_from_spec(w.at("family").get<std::string>() + ":" +
                                  std::to_string(w.at("rank").get<int>()));
        return in;
    }
    if (j.contains("generators")) {
        std::vector<std::vector<Rat>> rows;
        for (const Json& g : j.at("generators"))
            rows.push_back(rat_vector(g));
        if (rows.empty())
            throw ValidationError("empty generator list needs an 'ambient_dim'");
        int dim = static_cast<int>(rows[0].size());
        // row-major square matrices
        for (const auto& r : rows)
            if (r.size() != rows[0].size())
                throw ValidationError("generators must have equal sizes");
        int n = 0;
        while (n * n < dim)
            ++n;
        if (n * n != dim)
            throw ValidationError("generator entry count is not a perfect square");
        std::vector<QMatrix> gens;
        for (const auto& r : rows) {
            QMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    m.at(i, k) = r[static_cast<size_t>(i * n + k)];
            gens.push_back(std::move(m));
        }
        in.group = ReflectionGroup::generate(n, gens);
        return in;
    }
    in.arrangement = arrangement_from_json(j);
    return in;
}

Json subspace_to_json(const Subspace& s) {
    Json rows = Json::array();
    for (int i = 0; i < s.basis().rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < s.basis().cols(); ++j)
            row.push_back(rat_to_string(s.basis().at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json flat_to_json(const IntersectionPoset& poset, int flat) {
    const Flat& f = poset.flat(flat);
    Json j;
    j["id"] = flat;
    j["codim"] = f.codim;
    j["basis"] = subspace_to_json(f.subspace);
    j["hyperplanes"] = f.hyperplanes;
    j["components"] = f.components;
    j["irreducible"] = f.irreducible;
    return j;
}

Json poset_to_json(const IntersectionPoset& poset) {
    Json j;
    j["ambient_dim"] = poset.arrangement().ambient_dim;
    Json flats = Json::array();
    for (int f = 0; f < poset.size(); ++f)
        flats.push_back(flat_to_json(poset, f));
    j["flats"] = std::move(flats);
    Json order = Json::array();
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b)
            if (a != b && poset.leq(a, b))
                order.push_back(Json::array({a, b}));
    j["order"] = std::move(order);
    return j;
}

Json monoid_to_json(const MonoidElement& e) {
    Json j = Json::array();
    for (const Letter& l : e.letters) {
        Json letter;
        letter["flat"] = l.flat;
        letter["mu"] = l.mu;
        j.push_back(std::move(letter));
    }
    return j;
}

MonoidElement monoid_from_json(const IntersectionPoset& poset, const Json& j) {
    if (!j.is_array())
        throw ValidationError("monoid element must be an array of letters");
    std::vector<Letter> letters;
    for (const Json& l : j) {
        int flat = l.at("flat").get<int>();
        if (flat < 0 || flat >= poset.size())
            throw ValidationError("flat id out of range");
        long long mu = l.at("mu").get<long long>();
        if (mu < 1 || mu > 1000000)
            throw ValidationError("letter weight must be between 1 and 10^6");
        make_letter(poset, flat, static_cast<unsigned long>(mu)); // validates the codim bound
        letters.push_back(Letter{flat, static_cast<unsigned long>(mu)});
    }
    return normalize(poset, std::move(letters));
}

Json ring_to_json(const RingElement& x) {
    Json j;
    j["coefficients"] = x.coeff == Coeff::Q ? "Q" : "Z";
    Json terms = Json::array();
    for (const auto& [e, c] : x.combo) {
        Json t;
        t["monoid"] = monoid_to_json(e);
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

RingElement ring_from_json(const IntersectionPoset& poset, const Json& j) {
    RingElement x;
    std::string coeff = j.value("coefficients", "Q");
    if (coeff == "Q")
        x.coeff = Coeff::Q;
    else if (coeff == "Z")
        x.coeff = Coeff::Z;
    else
        throw ValidationError("coefficients must be 'Q' or 'Z'");
    RingElement acc = ring_zero(x.coeff);
    for (const Json& t : j.at("terms")) {
        Rat c = rat_from_string(t.at("coeff").get<std::string>());
        if (x.coeff == Coeff::Z && !rat_is_integer(c))
            throw ValidationError("non-integer coefficient in a Z element");
        acc = ring_add(acc, scalar_multiply(c, ring_basis(monoid_from_json(poset, t.at("monoid")), x.coeff)));
    }
    return acc;
}

Json partition_to_json(const WeightedPartition& p) {
    Json j = Json::array();
    for (const auto& [size, weight] : p.parts)
        j.push_back(Json::array({size, weight}));
    return j;
}

WeightedPartition partition_from_json(const Json& j) {
    if (!j.is_array())
        throw ValidationError("weighted partition must be an array of [size, weight] pairs");
    std::vector<std::pair<int, unsigned long>> parts;
    for (const Json& p : j) {
        if (!p.is_array() || p.size() != 2)
            throw ValidationError("partition parts are [size, weight] pairs");
        long long weight = p[1].get<long long>();
        if (weight < 0 || weight > 1000000)
            throw ValidationError("part weight must be between 0 and 10^6");
        parts.emplace_back(p[0].get<int>(), static_cast<unsigned long>(weight));
    }
    return WeightedPartition::make(std::move(parts));
}

RootDatum datum_from_json(const Json& j) {
    std::vector<std::vector<Rat>> roots, coroots;
    for (const Json& r : j.at("simple_roots"))
        roots.push_back(rat_vector(r));
    for (const Json& r : j.at("simple_coroots"))
        coroots.push_back(rat_vector(r));
    Rat scale(1);
    if (j.contains("pairing_scale"))
        scale = rat_from_string(j.at("pairing_scale").get<std::string>());
    int sign = 1;
    if (j.contains("sign")) {
        std::string s = j.at("sign").get<std::string>();
        if (s == "+")
            sign = 1;
        else if (s == "-")
            sign = -1;
        else
            throw ValidationError("sign must be '+' or '-'");
    }
    return RootDatum::custom(roots, coroots, scale, sign);
}

} // namespace camring
