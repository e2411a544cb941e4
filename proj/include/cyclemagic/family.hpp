#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace cyclemagic {

using Int = std::int64_t;

// Thrown when a family parameter falls outside the range its theorem allows.
class ParameterOutOfRange : public std::invalid_argument {
public:
    ParameterOutOfRange(const std::string& param, const std::string& allowed)
        : std::invalid_argument("parameter " + param + " out of range (need " + allowed + ")"),
          param_(param), allowed_(allowed) {}
    const std::string& param() const { return param_; }
    const std::string& allowed() const { return allowed_; }

private:
    std::string param_;
    std::string allowed_;
};

enum class Family {
    Fans,
    Ladders,
    TriangularLadders,
    Wheels,
    Books,
    Antiprism,
    FanUnion,
    LadderUnion,
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Fans: return "fans";
        case Family::Ladders: return "ladders";
        case Family::TriangularLadders: return "triangular-ladders";
        case Family::Wheels: return "wheels";
        case Family::Books: return "books";
        case Family::Antiprism: return "antiprism";
        case Family::FanUnion: return "fan-union";
        case Family::LadderUnion: return "ladder-union";
    }
    throw std::logic_error("unknown family");
}

inline Family family_from_name(const std::string& s) {
    for (Family f : {Family::Fans, Family::Ladders, Family::TriangularLadders, Family::Wheels,
                     Family::Books, Family::Antiprism, Family::FanUnion, Family::LadderUnion})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family name: " + s);
}

// Which family plus its integer parameters; the single source of truth for
// the derived sizes v and e. Unused parameters stay 0.
struct FamilySpec {
    Family family = Family::Fans;
    Int m = 0;  // copy count
    Int n = 0;  // size index
    Int s = 0;  // larger copies (unions)
    Int k = 0;  // smaller copies (unions)
    Int l = 0;  // copy count (antiprism)

    static FamilySpec fans(Int m, Int n) { return {Family::Fans, m, n, 0, 0, 0}; }
    static FamilySpec ladders(Int m, Int n) { return {Family::Ladders, m, n, 0, 0, 0}; }
    static FamilySpec triangular_ladders(Int m, Int n) {
        return {Family::TriangularLadders, m, n, 0, 0, 0};
    }
    static FamilySpec wheels(Int m, Int n) { return {Family::Wheels, m, n, 0, 0, 0}; }
    static FamilySpec books(Int m, Int n) { return {Family::Books, m, n, 0, 0, 0}; }
    static FamilySpec antiprism(Int l, Int m, Int n) {
        return {Family::Antiprism, m, n, 0, 0, l};
    }
    static FamilySpec fan_union(Int s, Int k, Int n) {
        return {Family::FanUnion, 0, n, s, k, 0};
    }
    static FamilySpec ladder_union(Int s, Int k, Int n) {
        return {Family::LadderUnion, 0, n, s, k, 0};
    }

    // Per-copy path length for the union families: b = n for the first s
    // copies, n-1 for the last k copies (copies are numbered 1..s+k).
    Int union_path_length(Int j) const { return j <= s ? n : n - 1; }

    Int cycle_length() const {
        switch (family) {
            case Family::Ladders:
            case Family::Books:
            case Family::LadderUnion: return 4;
            default: return 3;
        }
    }

    void validate() const {
        auto need = [](bool ok, const char* p, const char* range) {
            if (!ok) throw ParameterOutOfRange(p, range);
        };
        switch (family) {
            case Family::Fans:
                need(m >= 2, "m", "m >= 2");
                need(n >= 3, "n", "n >= 3");
                break;
            case Family::Ladders:
                need(m >= 2, "m", "m >= 2");
                need(n >= 2, "n", "n >= 2");
                break;
            case Family::TriangularLadders:
                need(m >= 2, "m", "m >= 2");
                need(n >= 3, "n", "n >= 3");
                break;
            case Family::Wheels:
                need(m >= 2, "m", "m >= 2");
                need(n >= 3, "n", "n >= 3");
                break;
            case Family::Books:
                need(m >= 2, "m", "m >= 2");
                need(n >= 2, "n", "n >= 2");
                break;
            case Family::Antiprism:
                need(l >= 2, "l", "l >= 2");
                need(m >= 3, "m", "m >= 3");
                need(n >= 3, "n", "n >= 3");
                break;
            case Family::FanUnion:
                need(s >= 1, "s", "s >= 1");
                need(k >= 1, "k", "k >= 1");
                need(n >= 3, "n", "n >= 3");
                break;
            case Family::LadderUnion:
                need(s >= 1, "s", "s >= 1");
                need(k >= 1, "k", "k >= 1");
                // n = 2 would make the small copies single edges, which no
                // 4-cycle can cover; the covering hypothesis needs n >= 3.
                need(n >= 3, "n", "n >= 3");
                break;
        }
    }

    bool valid() const {
        try {
            validate();
            return true;
        } catch (const ParameterOutOfRange&) {
            return false;
        }
    }

    Int vertex_count() const {
        switch (family) {
            case Family::Fans: return m * (n + 1);
            case Family::Ladders: return 2 * m * n;
            case Family::TriangularLadders: return 2 * m * n;
            case Family::Wheels: return m * (n + 1);
            case Family::Books: return 2 * m * (n + 1);
            case Family::Antiprism: return l * m * n;
            case Family::FanUnion: return s * (n + 1) + n * k;
            case Family::LadderUnion: return 2 * (s * n + k * (n - 1));
        }
        throw std::logic_error("unknown family");
    }

    Int edge_count() const {
        switch (family) {
            case Family::Fans: return m * (2 * n - 1);
            case Family::Ladders: return 3 * m * n - 2 * m;
            case Family::TriangularLadders: return m * (4 * n - 3);
            case Family::Wheels: return 2 * m * n;
            case Family::Books: return m * (3 * n + 1);
            case Family::Antiprism: return l * m * (3 * n - 2);
            case Family::FanUnion: return s * (2 * n - 1) + k * (2 * n - 3);
            case Family::LadderUnion: return s * (3 * n - 2) + k * (3 * n - 5);
        }
        throw std::logic_error("unknown family");
    }

    std::map<std::string, Int> params() const {
        switch (family) {
            case Family::Antiprism: return {{"l", l}, {"m", m}, {"n", n}};
            case Family::FanUnion:
            case Family::LadderUnion: return {{"k", k}, {"n", n}, {"s", s}};
            default: return {{"m", m}, {"n", n}};
        }
    }

    static FamilySpec from_params(Family f, const std::map<std::string, Int>& p) {
        FamilySpec spec;
        spec.family = f;
        auto get = [&p](const char* key) {
            auto it = p.find(key);
            return it == p.end() ? Int{0} : it->second;
        };
        spec.m = get("m");
        spec.n = get("n");
        spec.s = get("s");
        spec.k = get("k");
        spec.l = get("l");
        return spec;
    }
};

// Exact integer division; a remainder means a printed formula was applied
// outside its intended parity and must be treated as a typo trigger.
inline Int exact_div(Int a, Int b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("non-exact division " + std::to_string(a) + "/" + std::to_string(b));
    return a / b;
}

}  // namespace cyclemagic
