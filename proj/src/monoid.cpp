#include "camring/monoid.hpp"

#include <algorithm>
#include <functional>

#include "camring/errors.hpp"

namespace camring {

unsigned long MonoidElement::weight() const {
    unsigned long w = 0;
    for (const Letter& l : letters)
        w += l.mu;
    return w;
}

bool MonoidElement::operator<(const MonoidElement& rhs) const {
    unsigned long wa = weight(), wb = rhs.weight();
    if (wa != wb)
        return wa < wb;
    return letters < rhs.letters;
}

MonoidElement make_letter(const IntersectionPoset& poset, int flat, unsigned long mu) {
    const Flat& f = poset.flat(flat);
    if (f.codim == 0)
        throw ValidationError("the full space is not a letter of the monoid");
    if (!f.irreducible)
        throw ValidationError("letter flat must be irreducible");
    if (mu < static_cast<unsigned long>(f.codim))
        throw ValidationError("letter weight " + std::to_string(mu) + " is below the codimension " +
                              std::to_string(f.codim));
    return MonoidElement{{Letter{flat, mu}}};
}

namespace {

int join_all(const IntersectionPoset& poset, const std::vector<Letter>& letters,
             const std::vector<int>& positions) {
    int acc = positions.empty() ? 0 : letters[positions[0]].flat;
    for (size_t i = 1; i < positions.size(); ++i)
        acc = poset.join(acc, letters[positions[i]].flat);
    return acc;
}

// Finds the first sub-multiset (pairs first, then larger ones in canonical
// order) whose flats intersect in an irreducible flat; merges it in place.
bool merge_step(const IntersectionPoset& poset, std::vector<Letter>& letters) {
    const int k = static_cast<int>(letters.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int meet = poset.join(letters[i].flat, letters[j].flat);
            if (poset.flat(meet).irreducible) {
                Letter merged{meet, letters[i].mu + letters[j].mu};
                letters.erase(letters.begin() + j);
                letters.erase(letters.begin() + i);
                letters.push_back(merged);
                return true;
            }
        }
    // The defining relation is l-ary; merges of size ≥ 3 that are not
    // reachable by pair merges are rare but handled.
    for (int size = 3; size <= k; ++size) {
        std::vector<int> idx(size);
        // enumerate index subsets lexicographically
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            int meet = join_all(poset, letters, idx);
            if (poset.flat(meet).irreducible) {
                unsigned long mu = 0;
                for (int p : idx)
                    mu += letters[p].mu;
                for (int i = size - 1; i >= 0; --i)
                    letters.erase(letters.begin() + idx[i]);
                letters.push_back(Letter{meet, mu});
                return true;
            }
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == k - size + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    return false;
}

} // namespace

MonoidElement normalize(const IntersectionPoset& poset, std::vector<Letter> letters) {
    std::sort(letters.begin(), letters.end());
    while (merge_step(poset, letters))
        std::sort(letters.begin(), letters.end());
    return MonoidElement{std::move(letters)};
}

MonoidElement multiply(const IntersectionPoset& poset, const MonoidElement& a, const MonoidElement& b) {
    std::vector<Letter> letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return normalize(poset, std::move(letters));
}

int support(const IntersectionPoset& poset, const MonoidElement& e) {
    int acc = 0; // flat 0 is t
    for (const Letter& l : e.letters)
        acc = poset.join(acc, l.flat);
    return acc;
}

MonoidElement w_act(const IntersectionPoset& poset, const ReflectionGroup& group, int w,
                    const MonoidElement& e) {
    int winv = group.inverse(w);
    std::vector<Letter> letters;
    for (const Letter& l : e.letters)
        letters.push_back(Letter{group.act_flat(poset, winv, l.flat), l.mu});
    return normalize(poset, std::move(letters));
}

namespace {

// Supports of normal forms are sets of distinct irreducible flats in which
// no subset of size ≥ 2 meets in an irreducible flat.
void extend_supports(const IntersectionPoset& poset, const std::vector<int>& alphabet,
                     std::vector<int>& chosen, unsigned long codim_sum, unsigned long budget,
                     size_t next, std::vector<std::vector<int>>& out) {
    out.push_back(chosen);
    for (size_t i = next; i < alphabet.size(); ++i) {
        int f = alphabet[i];
        unsigned long c = static_cast<unsigned long>(poset.flat(f).codim);
        if (codim_sum + c > budget)
            continue;
        // check every subset of `chosen` together with f
        bool normal = true;
        const size_t m = chosen.size();
        for (size_t mask = 0; mask < (size_t{1} << m) && normal; ++mask) {
            int meet = f;
            for (size_t b = 0; b < m; ++b)
                if (mask & (size_t{1} << b))
                    meet = poset.join(meet, chosen[b]);
            if (mask != 0 && poset.flat(meet).irreducible)
                normal = false;
        }
        if (!normal)
            continue;
        chosen.push_back(f);
        extend_supports(poset, alphabet, chosen, codim_sum + c, budget, i + 1, out);
        chosen.pop_back();
    }
}

void compositions(unsigned long total, size_t parts, std::vector<unsigned long>& acc,
                  const std::function<void(const std::vector<unsigned long>&)>& emit) {
    if (parts == 0) {
        if (total == 0)
            emit(acc);
        return;
    }
    if (parts == 1) {
        acc.push_back(total);
        emit(acc);
        acc.pop_back();
        return;
    }
    for (unsigned long v = 0; v <= total; ++v) {
        acc.push_back(v);
        compositions(total - v, parts - 1, acc, emit);
        acc.pop_back();
    }
}

} // namespace

std::vector<std::vector<MonoidElement>> enumerate_by_degree(const IntersectionPoset& poset, int max_degree) {
    if (max_degree < 0)
        throw ValidationError("max_degree must be nonnegative");
    unsigned long budget = static_cast<unsigned long>(max_degree / 2);
    std::vector<std::vector<MonoidElement>> out(budget + 1);

    std::vector<int> alphabet;
    for (int f = 0; f < poset.size(); ++f)
        if (poset.flat(f).irreducible && poset.flat(f).codim > 0)
            alphabet.push_back(f);

    std::vector<std::vector<int>> supports;
    std::vector<int> chosen;
    extend_supports(poset, alphabet, chosen, 0, budget, 0, supports);

    for (const std::vector<int>& s : supports) {
        unsigned long base = 0;
        for (int f : s)
            base += static_cast<unsigned long>(poset.flat(f).codim);
        for (unsigned long w = base; w <= budget; ++w) {
            std::vector<unsigned long> acc;
            compositions(w - base, s.size(), acc, [&](const std::vector<unsigned long>& extra) {
                std::vector<Letter> letters;
                for (size_t i = 0; i < s.size(); ++i)
                    letters.push_back(
                        Letter{s[i], static_cast<unsigned long>(poset.flat(s[i]).codim) + extra[i]});
                out[w].push_back(MonoidElement{std::move(letters)});
            });
        }
    }
    for (auto& bucket : out)
        std::sort(bucket.begin(), bucket.end());
    return out;
}

std::vector<std::vector<std::vector<MonoidElement>>>
orbit_enumerate(const IntersectionPoset& poset, const ReflectionGroup& group, int max_degree) {
    auto by_degree = enumerate_by_degree(poset, max_degree);
    std::vector<std::vector<std::vector<MonoidElement>>> out(by_degree.size());
    for (size_t d = 0; d < by_degree.size(); ++d) {
        std::map<MonoidElement, bool> placed;
        for (const MonoidElement& e : by_degree[d]) {
            if (placed.count(e))
                continue;
            std::vector<MonoidElement> orbit{e};
            placed[e] = true;
            for (size_t i = 0; i < orbit.size(); ++i)
                for (int gen : group.generators()) {
                    MonoidElement img = w_act(poset, group, gen, orbit[i]);
                    if (!placed.count(img)) {
                        placed[img] = true;
                        orbit.push_back(img);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            out[d].push_back(std::move(orbit));
        }
    }
    return out;
}

LchWord to_lch(const IntersectionPoset& poset, const MonoidElement& e) {
    std::map<int, unsigned long> mult;
    for (const Letter& l : e.letters) {
        const Flat& f = poset.flat(l.flat);
        unsigned long excess = l.mu - static_cast<unsigned long>(f.codim);
        if (excess > 0) {
            int a = f.hyperplanes.front();
            auto af = poset.find(poset.arrangement().hyperplanes[a]);
            mult[*af] += excess;
        }
        mult[l.flat] += 1;
    }
    LchWord w;
    for (auto& [flat, m] : mult)
        w.letters.emplace_back(flat, m);
    return w;
}

MonoidElement from_lch(const IntersectionPoset& poset, const LchWord& word) {
    std::vector<Letter> letters;
    for (const auto& [flat, mult] : word.letters) {
        const Flat& f = poset.flat(flat);
        if (f.codim == 0)
            continue; // t is the identity
        for (const std::vector<int>& block : f.components) {
            Subspace x = poset.arrangement().hyperplanes[block.front()];
            for (size_t i = 1; i < block.size(); ++i)
                x = x.intersect(poset.arrangement().hyperplanes[block[i]]);
            auto id = poset.find(x);
            if (!id)
                throw std::logic_error("component intersection is not a flat");
            for (unsigned long r = 0; r < mult; ++r)
                letters.push_back(Letter{*id, static_cast<unsigned long>(poset.flat(*id).codim)});
        }
    }
    return normalize(poset, std::move(letters));
}

} // namespace camring
