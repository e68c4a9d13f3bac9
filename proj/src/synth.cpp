// Copyright 2026 The gqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqca/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "gqca/transport.hpp"

namespace gqca {

namespace {

using ImageTuple = std::vector<CellConfig>;

struct TupleHash {
    uint64_t a, b;
    bool operator==(const TupleHash &o) const = default;
};
struct TupleHasher {
    size_t operator()(const TupleHash &h) const { return h.a ^ (h.b * 0x9e3779b97f4a7c15ull); }
};

/// Two independent FNV-1a streams; 128 collision bits make accidental
/// dedup collisions negligible at the node counts the search reaches.
TupleHash hash_tuple(const ImageTuple &t) {
    uint64_t a = 14695981039346656037ull;
    uint64_t b = 0xcbf29ce484222325ull ^ 0x9e3779b97f4a7c15ull;
    for (const CellConfig &c : t) {
        for (CellLevel lv : c.levels) {
            a = (a ^ static_cast<uint8_t>(lv)) * 1099511628211ull;
            b = (b ^ (static_cast<uint8_t>(lv) + 0x3b)) * 0x100000001b3ull;
        }
        a = (a ^ 0x55) * 1099511628211ull;
        b = (b ^ 0xaa) * 0x100000001b3ull;
    }
    return {a, b};
}

struct TriggerHit {
    size_t cell = 0;
    bool one_reads_down = true;
};

/// Trigger condition for one (kind, field) class: enabled images expose
/// exactly one matching cell, common to all of them; disabled images none;
/// paired images agree everywhere but that cell and read opposite two-level
/// values there with a single orientation across pairs.
std::optional<TriggerHit> scan_class(const ImageTuple &images, const std::vector<bool> &enabled,
                                     size_t target_mask, CellType kind, int field) {
    long trigger = -1;
    for (size_t w = 0; w < images.size(); ++w) {
        int count = 0;
        long cell = -1;
        const size_t n = images[w].n_cells();
        for (size_t i = kind == CellType::A ? 0 : 1; i < n; i += 2) {
            if (field_of(images[w], i) == field) {
                ++count;
                cell = static_cast<long>(i);
                if (count > 1) {
                    break;
                }
            }
        }
        if (!enabled[w]) {
            if (count != 0) {
                return std::nullopt;
            }
        } else if (count != 1) {
            return std::nullopt;
        } else if (trigger < 0) {
            trigger = cell;
        } else if (trigger != cell) {
            return std::nullopt;
        }
    }
    if (trigger < 0) {
        return std::nullopt;
    }
    const size_t t = static_cast<size_t>(trigger);
    int one_reads_down = -1;
    for (size_t w = 0; w < images.size(); ++w) {
        if (!enabled[w] || (w & target_mask)) {
            continue;
        }
        const CellConfig &img0 = images[w];
        const CellConfig &img1 = images[w | target_mask];
        for (size_t i = 0; i < img0.n_cells(); ++i) {
            if (i != t && img0[i] != img1[i]) {
                return std::nullopt;
            }
        }
        CellLevel a = img0[t], b = img1[t];
        int flag;
        if (a == CellLevel::Up && b == CellLevel::Down) {
            flag = 1;
        } else if (a == CellLevel::Down && b == CellLevel::Up) {
            flag = 0;
        } else {
            return std::nullopt;
        }
        if (one_reads_down < 0) {
            one_reads_down = flag;
        } else if (one_reads_down != flag) {
            return std::nullopt;
        }
    }
    if (one_reads_down < 0) {
        return std::nullopt;
    }
    return TriggerHit{t, one_reads_down == 1};
}

bool has_solid_cu(const CellConfig &config) {
    size_t run = 0;
    for (size_t i = 0; i < config.n_cells(); ++i) {
        run = config[i] == CellLevel::Up ? run + 1 : 0;
        if (run >= kCuCells) {
            return true;
        }
    }
    return false;
}

struct SearchContext {
    const SynthesisProblem *problem;
    Layout shifted;
    size_t words;
    size_t target_mask;
    std::vector<bool> enabled;
    PulseSequence alphabet;

    ImageTuple initial(const Layout &lay) const {
        ImageTuple t;
        const size_t n_q = problem->layout.n_qubits();
        const bool cu = problem->layout.cu_slot.has_value();
        for (size_t w = 0; w < words; ++w) {
            t.push_back(encode(lay, word_from_index(w, n_q, cu)));
        }
        return t;
    }

    /// Finds the first (kind, field) class whose trigger fires on `images`
    /// and, when the prefix survives the translation check, reports it.
    std::optional<std::tuple<TriggerHit, CellType, int>> check(
        const ImageTuple &images, const PulseSequence &prefix) const {
        for (CellType kind : {CellType::A, CellType::B}) {
            for (int field : problem->trigger_fields) {
                auto hit = scan_class(images, enabled, target_mask, kind, field);
                if (!hit) {
                    continue;
                }
                if (problem->require_one_reads_down && !hit->one_reads_down) {
                    continue;
                }
                if (problem->translation_check) {
                    ImageTuple moved = initial(shifted);
                    for (CellConfig &img : moved) {
                        img = classical_apply_sequence(img, prefix);
                    }
                    auto hit2 = scan_class(moved, enabled, target_mask, kind, field);
                    if (!hit2 || hit2->cell != hit->cell + 2 ||
                        hit2->one_reads_down != hit->one_reads_down) {
                        continue;
                    }
                }
                return std::make_tuple(*hit, kind, field);
            }
        }
        return std::nullopt;
    }
};

struct SearchOutcome {
    PulseSequence prefix;
    TriggerHit hit;
    CellType kind;
    int field;
    size_t nodes = 0;
};

/// Breadth-first exploration from `seed` applied to the canonical images,
/// bounded at `depth_cap` free pulses. Lexicographic tie-breaking comes from
/// the FIFO order and the fixed alphabet order.
std::optional<SearchOutcome> bfs_from_seed(const SearchContext &ctx, const PulseSequence &seed,
                                           size_t depth_cap, size_t *nodes_expanded) {
    ImageTuple start = ctx.initial(ctx.problem->layout);
    for (CellConfig &img : start) {
        img = classical_apply_sequence(img, seed);
    }
    struct Node {
        ImageTuple images;
        int parent;
        int letter;
        uint32_t depth;
    };
    std::vector<Node> nodes;
    std::unordered_set<TupleHash, TupleHasher> seen;
    seen.insert(hash_tuple(start));
    nodes.push_back({std::move(start), -1, -1, 0});

    for (size_t head = 0; head < nodes.size(); ++head) {
        PulseSequence prefix;  // built lazily only on candidate hits
        {
            // cheap pre-scan without the translation replay
            bool candidate = false;
            for (CellType kind : {CellType::A, CellType::B}) {
                for (int field : ctx.problem->trigger_fields) {
                    if (scan_class(nodes[head].images, ctx.enabled, ctx.target_mask, kind,
                                   field)) {
                        candidate = true;
                        break;
                    }
                }
                if (candidate) {
                    break;
                }
            }
            if (candidate) {
                prefix = seed;
                std::vector<int> letters;
                for (long at = static_cast<long>(head); nodes[at].parent >= 0;
                     at = nodes[at].parent) {
                    letters.push_back(nodes[at].letter);
                }
                for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
                    prefix.push_back(ctx.alphabet[static_cast<size_t>(*it)]);
                }
                auto res = ctx.check(nodes[head].images, prefix);
                if (res) {
                    SearchOutcome out;
                    out.prefix = prefix;
                    out.hit = std::get<0>(*res);
                    out.kind = std::get<1>(*res);
                    out.field = std::get<2>(*res);
                    out.nodes = *nodes_expanded;
                    return out;
                }
            }
        }
        if (nodes[head].depth >= depth_cap) {
            continue;
        }
        ++*nodes_expanded;
        bool at_root = nodes[head].parent < 0;
        for (size_t li = 0; li < ctx.alphabet.size(); ++li) {
            const UpdateRule &rule = ctx.alphabet[li];
            if (!at_root && nodes[head].letter == static_cast<int>(li)) {
                continue;  // inversion pulses are self-inverse
            }
            if (at_root && !seed.empty() && rule.kind == seed.back().kind &&
                rule.field == seed.back().field) {
                continue;
            }
            ImageTuple next;
            next.reserve(nodes[head].images.size());
            for (const CellConfig &img : nodes[head].images) {
                next.push_back(classical_apply(img, rule));
            }
            if (seen.insert(hash_tuple(next)).second) {
                nodes.push_back({std::move(next), static_cast<int>(head),
                                 static_cast<int>(li), nodes[head].depth + 1});
            }
        }
    }
    return std::nullopt;
}

}  // namespace

PulseSequence default_alphabet(bool allow_end_rules) {
    PulseSequence a;
    a.emplace_back(CellType::A, 0);
    a.emplace_back(CellType::B, 0);
    a.emplace_back(CellType::A, 2);
    a.emplace_back(CellType::B, 2);
    a.emplace_back(CellType::A, -2);
    a.emplace_back(CellType::B, -2);
    if (allow_end_rules) {
        a.emplace_back(CellType::A, 1);
        a.emplace_back(CellType::A, -1);
        a.emplace_back(CellType::B, 1);
        a.emplace_back(CellType::B, -1);
    }
    return a;
}

PulseSequence substitute_slot(const PulseSequence &seq, size_t slot_index, const Gate1 &u,
                              const std::string &label) {
    if (slot_index >= seq.size() || !seq[slot_index].is_slot()) {
        throw Error("substitute_slot: no U slot at index " + std::to_string(slot_index));
    }
    PulseSequence out = seq;
    out[slot_index].gate = u;
    out[slot_index].label = label;
    return out;
}

std::optional<SynthesisResult> synthesize(const SynthesisProblem &problem) {
    problem.layout.validate();
    const size_t n_q = problem.layout.n_qubits();
    const size_t words = size_t{1} << n_q;
    const bool cu = problem.layout.cu_slot.has_value();
    const size_t target_mask = size_t{1} << (n_q - 1 - problem.target.target);

    SearchContext ctx;
    ctx.problem = &problem;
    ctx.words = words;
    ctx.target_mask = target_mask;
    ctx.enabled.resize(words);
    for (size_t w = 0; w < words; ++w) {
        ctx.enabled[w] = problem.target.enabled_on(w, n_q);
    }
    ctx.alphabet =
        problem.alphabet.empty() ? default_alphabet(problem.allow_end_rules) : problem.alphabet;
    for (const UpdateRule &r : ctx.alphabet) {
        if (!r.gate.permutation_action()) {
            throw NonClassicalGate("synthesis alphabet must be classical");
        }
    }
    if (problem.translation_check) {
        ctx.shifted = problem.layout;
        for (size_t &s : ctx.shifted.qubit_slots) {
            s += 2;
        }
        if (ctx.shifted.cu_slot) {
            ctx.shifted.cu_slot = *ctx.shifted.cu_slot + 2;
        }
        ctx.shifted.validate();
    }

    const size_t max_prefix = problem.max_len == 0 ? 0 : (problem.max_len - 1) / 2;
    size_t nodes_expanded = 0;
    std::optional<SearchOutcome> outcome;

    // Phase 1: exhaustive breadth-first search over all prefixes up to
    // exhaustive_depth (or max_prefix when smaller).
    const size_t plain_cap = std::min(max_prefix, problem.exhaustive_depth);
    outcome = bfs_from_seed(ctx, {}, plain_cap, &nodes_expanded);

    // Phase 2: [transport run][free burst] shaped prefixes, iterating the
    // burst depth outward and the run length j inward; the first hit at the
    // smallest burst depth wins (j ascending breaks ties). Nodes store the
    // packed image bytes so deep bursts stay within memory.
    if (!outcome && max_prefix > plain_cap) {
        const size_t q_cap = std::min(problem.seeded_free_depth, max_prefix);
        const size_t n_cells = problem.layout.n_cells;
        const size_t tuple_words = words;  // nodes carry the base frame only
        auto pack = [&](const ImageTuple &t) {
            std::string key;
            key.reserve(t.size() * n_cells);
            for (const CellConfig &c : t) {
                for (CellLevel lv : c.levels) {
                    key.push_back(static_cast<char>(lv));
                }
            }
            return key;
        };
        auto unpack = [&](const std::string &key) {
            ImageTuple t(tuple_words, CellConfig::all_down(n_cells));
            size_t at = 0;
            for (CellConfig &c : t) {
                for (size_t i = 0; i < n_cells; ++i) {
                    c.levels[i] = static_cast<CellLevel>(key[at++]);
                }
            }
            return t;
        };
        for (size_t q = plain_cap > 0 ? 1 : 0; q <= q_cap && !outcome; ++q) {
            size_t j_hi = max_prefix > q ? max_prefix - q : 0;
            for (size_t j = 1; j <= j_hi && !outcome; ++j) {
                if (j + q <= plain_cap) {
                    continue;  // covered by the exhaustive phase
                }
                PulseSequence seed = transport(-static_cast<long>(j));
                ImageTuple start = ctx.initial(problem.layout);
                for (CellConfig &img : start) {
                    img = classical_apply_sequence(img, seed);
                }
                struct Node {
                    std::string key;
                    int parent;
                    int letter;
                    uint32_t depth;
                };
                std::vector<Node> nodes;
                std::unordered_set<TupleHash, TupleHasher> seen;
                seen.insert(hash_tuple(start));
                nodes.push_back(Node{pack(start), -1, -1, 0});
                for (size_t head = 0; head < nodes.size() && !outcome; ++head) {
                    ImageTuple images = unpack(nodes[head].key);
                    if (nodes[head].depth == q) {
                        bool candidate = false;
                        for (CellType kind : {CellType::A, CellType::B}) {
                            for (int field : problem.trigger_fields) {
                                ImageTuple base(images.begin(),
                                                images.begin() + static_cast<long>(words));
                                if (scan_class(base, ctx.enabled, target_mask, kind, field)) {
                                    candidate = true;
                                    break;
                                }
                            }
                            if (candidate) {
                                break;
                            }
                        }
                        if (candidate) {
                            PulseSequence prefix = seed;
                            std::vector<int> letters;
                            for (long at = static_cast<long>(head); nodes[at].parent >= 0;
                                 at = nodes[at].parent) {
                                letters.push_back(nodes[at].letter);
                            }
                            for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
                                prefix.push_back(ctx.alphabet[static_cast<size_t>(*it)]);
                            }
                            auto res = ctx.check(images, prefix);
                            if (res) {
                                SearchOutcome out;
                                out.prefix = prefix;
                                out.hit = std::get<0>(*res);
                                out.kind = std::get<1>(*res);
                                out.field = std::get<2>(*res);
                                out.nodes = nodes_expanded;
                                outcome = out;
                            }
                        }
                        continue;
                    }
                    ++nodes_expanded;
                    bool at_root = nodes[head].parent < 0;
                    for (size_t li = 0; li < ctx.alphabet.size(); ++li) {
                        const UpdateRule &rule = ctx.alphabet[li];
                        if (!at_root && nodes[head].letter == static_cast<int>(li)) {
                            continue;
                        }
                        if (at_root && !seed.empty() && rule.kind == seed.back().kind &&
                            rule.field == seed.back().field) {
                            continue;
                        }
                        ImageTuple next;
                        next.reserve(images.size());
                        for (const CellConfig &img : images) {
                            next.push_back(classical_apply(img, rule));
                        }
                        if (seen.insert(hash_tuple(next)).second) {
                            nodes.push_back(Node{pack(next), static_cast<int>(head),
                                                 static_cast<int>(li),
                                                 nodes[head].depth + 1});
                        }
                    }
                }
            }
        }
    }

    if (!outcome) {
        return std::nullopt;
    }

    SynthesisResult result;
    result.trigger.kind = outcome->kind;
    result.trigger.field = outcome->field;
    result.trigger.cell = outcome->hit.cell;
    result.trigger.one_reads_down = outcome->hit.one_reads_down;
    result.slot_index = outcome->prefix.size();
    result.nodes_expanded = nodes_expanded;

    PulseSequence seq = outcome->prefix;
    seq.emplace_back(outcome->kind, outcome->field, gates::identity2(), "U");
    PulseSequence suffix = inverse_sequence(outcome->prefix);
    seq.insert(seq.end(), suffix.begin(), suffix.end());
    result.sequence = seq;

    {
        ImageTuple images = ctx.initial(problem.layout);
        for (const UpdateRule &r : outcome->prefix) {
            for (CellConfig &img : images) {
                img = classical_apply(img, r);
                if (has_solid_cu(img)) {
                    result.solid_cu_intermediate = true;
                }
            }
        }
    }

    const Layout &vlayout = problem.verify_layout ? *problem.verify_layout : problem.layout;

    // classical truth-table check with U = X before any quantum pass
    {
        PulseSequence concrete = substitute_slot(seq, result.slot_index, gates::pauli_x(), "INV");
        LogicalAction action = extract_logical_action(concrete, vlayout);
        GateSpec x_spec = problem.target;
        x_spec.u = gates::pauli_x();
        x_spec.u_label = "X";
        double err = action.max_deviation(logical_matrix(x_spec, n_q));
        if (err > problem.tolerance || action.leakage > problem.tolerance) {
            throw Error("synthesize: trigger failed the classical truth-table check (err " +
                        std::to_string(err) + ", leakage " + std::to_string(action.leakage) +
                        ")");
        }
        result.displacement = action.displacement;
        result.action_error = err;
        result.leakage = action.leakage;
    }

    if (!problem.classical_only) {
        Gate1 u = problem.target.u;
        Gate1 cell_gate = result.trigger.one_reads_down
                              ? multiply2(multiply2(gates::pauli_x(), u), gates::pauli_x())
                              : u;
        PulseSequence concrete = substitute_slot(seq, result.slot_index, cell_gate, "");
        LogicalAction action = extract_logical_action(concrete, vlayout);
        result.action_error = action.max_deviation(logical_matrix(problem.target, n_q));
        result.leakage = action.leakage;
        result.displacement = action.displacement;
        result.quantum_verified = true;
        if (result.action_error > problem.tolerance || result.leakage > problem.tolerance) {
            throw Error("synthesize: quantum verification failed (action error " +
                        std::to_string(result.action_error) + ", leakage " +
                        std::to_string(result.leakage) + ")");
        }
    }

    return result;
}

std::string synthesis_report_json(const SynthesisProblem &problem,
                                  const SynthesisResult &result) {
    nlohmann::json j;
    j["schema"] = 1;
    j["target"] = problem.target.literal();
    j["layout"] = format_layout(problem.layout);
    j["length"] = result.sequence.size();
    j["slot_index"] = result.slot_index;
    j["sequence"] = format_sequence(result.sequence);
    j["trigger"] = {
        {"kind", result.trigger.kind == CellType::A ? "A" : "B"},
        {"field", result.trigger.field},
        {"cell", result.trigger.cell},
        {"one_reads_down", result.trigger.one_reads_down},
    };
    j["action_error"] = result.action_error;
    j["leakage"] = result.leakage;
    j["displacement"] = result.displacement;
    j["nodes_expanded"] = result.nodes_expanded;
    j["quantum_verified"] = result.quantum_verified;
    j["solid_cu_intermediate"] = result.solid_cu_intermediate;
    return j.dump(2);
}

}  // namespace gqca

namespace gqca {

namespace {

/// Locates the unique canonical CU pattern in a config; -1 when absent or
/// ambiguous.
long find_canonical_cu(const CellConfig &c) {
    static const CellLevel kCu[kCuCells] = {CellLevel::Up,   CellLevel::Up, CellLevel::Down,
                                            CellLevel::Down, CellLevel::Up, CellLevel::Up};
    long found = -1;
    for (size_t i = 0; i + kCuCells <= c.n_cells(); ++i) {
        bool hit = true;
        for (size_t k = 0; k < kCuCells; ++k) {
            hit = hit && c[i + k] == kCu[k];
        }
        if (hit) {
            if (found >= 0) {
                return -1;
            }
            found = static_cast<long>(i);
        }
    }
    return found;
}

}  // namespace

std::optional<StampResult> synthesize_stamp(const StampProblem &problem) {
    problem.layout.validate();
    if (!problem.layout.cu_slot || problem.layout.qubit_slots.empty()) {
        throw Error("stamp synthesis needs a bit slot and a CU slot");
    }
    const size_t n_q = problem.layout.n_qubits();
    const size_t bit_q = n_q - 1;  // last slot carries the bit; others spectate
    const size_t words = size_t{1} << n_q;
    const size_t bit_mask = size_t{1} << (n_q - 1 - bit_q);
    const long cu_home = static_cast<long>(*problem.layout.cu_slot);
    const PulseSequence alphabet =
        problem.alphabet.empty() ? default_alphabet(false) : problem.alphabet;

    using ImageTuple = std::vector<CellConfig>;
    auto initial = [&](bool altered, const std::vector<CellLevel> &form) {
        ImageTuple t;
        for (size_t w = 0; w < words; ++w) {
            LogicalWord word = word_from_index(w, n_q, !altered);
            CellConfig c = encode(problem.layout, word);
            if (altered) {
                for (size_t k = 0; k < kCuCells; ++k) {
                    c[*problem.layout.cu_slot + k] = form[k];
                }
            }
            t.push_back(std::move(c));
        }
        return t;
    };

    // check: per spectator assignment, the keep image is the clean coded
    // state at a common displacement and the other image matches it outside
    // the CU window, showing one fixed non-canonical form inside
    auto check = [&](const ImageTuple &images) -> std::optional<StampResult> {
        const size_t keep_bit = static_cast<size_t>(problem.keep_on);
        long p = -1;
        for (size_t w = 0; w < words; ++w) {
            if (((w & bit_mask) != 0) != (keep_bit == 1)) {
                continue;
            }
            long here = find_canonical_cu(images[w]);
            if (here < 0 || (p >= 0 && here != p)) {
                return std::nullopt;
            }
            p = here;
        }
        if (p < 0) {
            return std::nullopt;
        }
        long dc = p - cu_home;
        long d = -dc;  // transport-consistent frame shift of the qubit side
        std::vector<CellLevel> form;
        for (size_t w = 0; w < words; ++w) {
            LogicalWord word = word_from_index(w, n_q, true);
            CellConfig want;
            try {
                want = encode(problem.layout.displaced(d), word);
            } catch (const InvalidConfig &) {
                return std::nullopt;
            }
            const CellConfig &img = images[w];
            bool is_keep = ((w & bit_mask) != 0) == (keep_bit == 1);
            for (size_t i = 0; i < img.n_cells(); ++i) {
                bool in_window = i >= static_cast<size_t>(p) &&
                                 i < static_cast<size_t>(p) + kCuCells;
                if (in_window) {
                    continue;
                }
                if (img[i] != want[i]) {
                    return std::nullopt;
                }
            }
            if (is_keep) {
                continue;  // window already matched the canonical pattern
            }
            std::vector<CellLevel> here(img.levels.begin() + p,
                                        img.levels.begin() + p + kCuCells);
            if (form.empty()) {
                form = here;
            } else if (form != here) {
                return std::nullopt;
            }
        }
        if (form.empty()) {
            return std::nullopt;
        }
        // reject the canonical form itself
        CellConfig probe = CellConfig::all_down(kCuCells + 4);
        for (size_t k = 0; k < kCuCells; ++k) {
            probe[2 + k] = form[k];
        }
        if (find_canonical_cu(probe) >= 0) {
            return std::nullopt;
        }
        StampResult res;
        res.displacement = d;
        res.altered = form;
        return res;
    };

    // post-hoc: the altered form is absorbing and transports rigidly
    auto robust = [&](const PulseSequence &prefix, const StampResult &cand) {
        ImageTuple alt = initial(true, cand.altered);
        for (size_t w = 0; w < words; ++w) {
            CellConfig img = classical_apply_sequence(alt[w], prefix);
            CellConfig want = encode(problem.layout.displaced(cand.displacement),
                                     word_from_index(w, n_q, false));
            long p = cu_home + (-cand.displacement);
            for (size_t k = 0; k < kCuCells; ++k) {
                want[static_cast<size_t>(p) + k] = cand.altered[k];
            }
            if (!(img == want)) {
                return false;
            }
        }
        // rigid transport of the altered form
        for (long k : {1L, 2L, 3L, 4L}) {
            for (size_t w = 0; w < words; ++w) {
                CellConfig img = classical_apply_sequence(alt[w], transport(k));
                CellConfig want = encode(problem.layout.displaced(-k),
                                         word_from_index(w, n_q, false));
                long p = cu_home + k;
                for (size_t kk = 0; kk < kCuCells; ++kk) {
                    want[static_cast<size_t>(p) + kk] = cand.altered[kk];
                }
                if (!(img == want)) {
                    return false;
                }
            }
        }
        return true;
    };

    struct Node {
        ImageTuple images;
        int parent;
        int letter;
        uint32_t depth;
    };
    size_t nodes_expanded = 0;

    auto bfs = [&](const PulseSequence &seed, size_t cap,
                   bool exact_depth) -> std::optional<StampResult> {
        ImageTuple start = initial(false, {});
        for (CellConfig &img : start) {
            img = classical_apply_sequence(img, seed);
        }
        std::vector<Node> nodes;
        std::unordered_set<TupleHash, TupleHasher> seen;
        seen.insert(hash_tuple(start));
        nodes.push_back({std::move(start), -1, -1, 0});
        for (size_t head = 0; head < nodes.size(); ++head) {
            if (!exact_depth || nodes[head].depth == cap) {
                auto cand = check(nodes[head].images);
                if (cand) {
                    PulseSequence prefix = seed;
                    std::vector<int> letters;
                    for (long at = static_cast<long>(head); nodes[at].parent >= 0;
                         at = nodes[at].parent) {
                        letters.push_back(nodes[at].letter);
                    }
                    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
                        prefix.push_back(alphabet[static_cast<size_t>(*it)]);
                    }
                    if (robust(prefix, *cand)) {
                        StampResult out = *cand;
                        out.pulses = prefix;
                        out.nodes_expanded = nodes_expanded;
                        return out;
                    }
                }
            }
            if (nodes[head].depth >= cap) {
                continue;
            }
            ++nodes_expanded;
            bool at_root = nodes[head].parent < 0;
            for (size_t li = 0; li < alphabet.size(); ++li) {
                const UpdateRule &rule = alphabet[li];
                if (!at_root && nodes[head].letter == static_cast<int>(li)) {
                    continue;
                }
                if (at_root && !seed.empty() && rule.kind == seed.back().kind &&
                    rule.field == seed.back().field) {
                    continue;
                }
                ImageTuple next;
                next.reserve(nodes[head].images.size());
                for (const CellConfig &img : nodes[head].images) {
                    next.push_back(classical_apply(img, rule));
                }
                if (seen.insert(hash_tuple(next)).second) {
                    nodes.push_back({std::move(next), static_cast<int>(head),
                                     static_cast<int>(li), nodes[head].depth + 1});
                }
            }
        }
        return std::nullopt;
    };

    const size_t plain_cap = std::min(problem.max_len, problem.exhaustive_depth);
    auto out = bfs({}, plain_cap, false);
    if (out) {
        return out;
    }
    const size_t q_cap = std::min(problem.seeded_free_depth, problem.max_len);
    for (size_t q = 1; q <= q_cap && !out; ++q) {
        size_t j_hi = problem.max_len > q ? problem.max_len - q : 0;
        for (size_t j = 1; j <= j_hi && !out; ++j) {
            if (j + q <= plain_cap) {
                continue;
            }
            out = bfs(transport(-static_cast<long>(j)), q, true);
        }
    }
    return out;
}

}  // namespace gqca
