#include "q5/state.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "q5/jet.hpp"
#include "q5/linalg.hpp"

namespace q5 {

PureState5::PureState5(Amplitudes amplitudes) : amps_(std::move(amplitudes)) {
    for (const auto& a : amps_) {
        if (a.radicand() == 1) continue;
        if (radicand_ != 1 && radicand_ != a.radicand())
            throw DomainError("state mixes sqrt(" + std::to_string(radicand_) + ") and sqrt(" +
                              std::to_string(a.radicand()) + ")");
        radicand_ = a.radicand();
    }
}

int PureState5::index_of(std::string_view bits) {
    if (bits.size() != kSlots) throw InputError("amplitude key '" + std::string(bits) + "' is not 5 bits");
    int index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InputError("amplitude key '" + std::string(bits) + "' is not 5 bits");
        index = 2 * index + (c - '0');
    }
    return index;
}

std::string PureState5::bits_of(int index) {
    std::string s(kSlots, '0');
    for (int b = 0; b < kSlots; ++b)
        if ((index >> (4 - b)) & 1) s[b] = '1';
    return s;
}

bool PureState5::is_zero() const {
    for (const auto& a : amps_)
        if (!q5::is_zero(a)) return false;
    return true;
}

Rational determinant(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

LocalOperation::LocalOperation() {
    for (auto& m : g_) m = Matrix2{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
}

LocalOperation::LocalOperation(std::array<Matrix2, kSlots> matrices) : g_(std::move(matrices)) {
    for (int s = 0; s < kSlots; ++s)
        if (determinant(g_[s]) != 1)
            throw InvalidOperation("matrix for qubit " + std::to_string(s + 1) + " has determinant " +
                                   to_string(determinant(g_[s])) + ", expected 1");
}

PureState5 apply_slocc(const LocalOperation& g, const PureState5& psi) {
    PureState5::Amplitudes cur;
    for (int i = 0; i < kAmplitudes; ++i) cur[i] = psi.amplitude(i);
    // Contract one tensor index at a time.
    for (int slot = 0; slot < kSlots; ++slot) {
        const int shift = 4 - slot;
        const Matrix2& m = g.matrix(slot);
        PureState5::Amplitudes next;
        for (int i = 0; i < kAmplitudes; ++i) {
            const int row = (i >> shift) & 1;
            const int base = i & ~(1 << shift);
            QuadExt acc;
            for (int col = 0; col < 2; ++col) {
                if (is_zero(m[row][col])) continue;
                acc += QuadExt(m[row][col]) * cur[base | (col << shift)];
            }
            next[i] = acc;
        }
        cur = std::move(next);
    }
    return PureState5(std::move(cur));
}

Matrix2 sl2_from_shears(const Rational& b, const Rational& c, const Rational& b2) {
    // [[1,b],[0,1]] [[1,0],[c,1]] = [[1+bc, b],[c, 1]]; then times [[1,b2],[0,1]].
    Rational a00 = 1 + b * c;
    return Matrix2{{{a00, Rational(a00 * b2 + b)}, {c, Rational(c * b2 + 1)}}};
}

Integer SeededRationals::next_integer(long bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return Integer(static_cast<long>(rng_() % span) - bound);
}

Rational SeededRationals::next(long bound) {
    Integer num = next_integer(bound);
    const auto den = static_cast<long>(rng_() % static_cast<std::uint64_t>(bound)) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Matrix2 random_sl2(std::uint64_t seed, long bound) {
    SeededRationals draw(seed);
    Rational b = draw.next(bound);
    Rational c = draw.next(bound);
    Rational b2 = draw.next(bound);
    return sl2_from_shears(b, c, b2);
}

LocalOperation random_local_operation(std::uint64_t seed, long bound) {
    std::array<Matrix2, kSlots> ms;
    for (int s = 0; s < kSlots; ++s) ms[s] = random_sl2(seed * 7919 + static_cast<std::uint64_t>(s) + 1, bound);
    return LocalOperation(std::move(ms));
}

PureState5 random_rational_state(std::uint64_t seed, long bound, bool integral) {
    SeededRationals draw(seed);
    PureState5::Amplitudes amps;
    for (auto& a : amps) a = integral ? QuadExt(Rational(draw.next_integer(bound))) : QuadExt(draw.next(bound));
    return PureState5(std::move(amps));
}

PureState5 random_product_state(std::uint64_t seed, long bound) {
    SeededRationals draw(seed);
    std::array<std::array<Rational, 2>, kSlots> v;
    for (auto& q : v) {
        do {
            q[0] = draw.next(bound);
            q[1] = draw.next(bound);
        } while (is_zero(q[0]) && is_zero(q[1]));
    }
    PureState5::Amplitudes amps;
    for (int i = 0; i < kAmplitudes; ++i) {
        Rational prod = 1;
        for (int s = 0; s < kSlots; ++s) prod *= v[s][(i >> (4 - s)) & 1];
        amps[i] = QuadExt(prod);
    }
    return PureState5(std::move(amps));
}

PureState5 osterloh_state(int k) {
    PureState5::Amplitudes amps;
    // The kets below are written with qubit 1 rightmost; that is the reading
    // under which their D rows show the published zero pattern.
    auto set = [&](std::string_view ket, QuadExt v) {
        std::string bits(ket.rbegin(), ket.rend());
        amps[PureState5::index_of(bits)] = std::move(v);
    };
    switch (k) {
        case 1:
            set("11111", 1);
            set("00000", 1);
            break;
        case 2:
            for (auto b : {"11111", "11100", "00010", "00001"}) set(b, 1);
            break;
        case 3:
            set("11111", QuadExt::sqrt(2));
            for (auto b : {"11000", "00100", "00010", "00001"}) set(b, 1);
            break;
        case 4:
            set("11111", QuadExt::sqrt(3));
            for (auto b : {"10000", "01000", "00100", "00010", "00001"}) set(b, 1);
            break;
        default:
            throw InputError("Osterloh-Siewert state index must be 1..4, got " + std::to_string(k));
    }
    return PureState5(std::move(amps));
}

PureState5 parse_state_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("state file must hold a JSON object");
    long radicand = 1;
    if (doc.contains("radicand")) {
        if (!doc["radicand"].is_number_integer()) throw InputError("radicand must be an integer");
        radicand = doc["radicand"].get<long>();
    }
    if (!is_square_free(radicand)) throw InputError("radicand must be a positive square-free integer");
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_object())
        throw InputError("state file needs an \"amplitudes\" object");

    static const std::regex key_re("^[01]{5}$");
    PureState5::Amplitudes amps;
    for (const auto& [key, value] : doc["amplitudes"].items()) {
        if (!std::regex_match(key, key_re)) throw InputError("amplitude key '" + key + "' must match [01]{5}");
        if (!value.is_object()) throw InputError("amplitude '" + key + "' must be an object with \"a\"/\"b\"");
        auto part = [&](const char* name) -> Rational {
            if (!value.contains(name)) return 0;
            if (!value[name].is_string()) throw InputError("amplitude '" + key + "' field must be a fraction string");
            return parse_rational(value[name].get<std::string>());
        };
        Rational a = part("a");
        Rational b = part("b");
        if (radicand == 1 && !is_zero(b)) throw InputError("surd part given but radicand is 1");
        amps[PureState5::index_of(key)] = QuadExt(std::move(a), std::move(b), radicand);
    }
    return PureState5(std::move(amps));
}

PureState5 load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open state file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

std::string state_to_json(const PureState5& psi) {
    nlohmann::ordered_json doc;
    doc["radicand"] = psi.radicand();
    nlohmann::ordered_json amps = nlohmann::ordered_json::object();
    for (int i = 0; i < kAmplitudes; ++i) {
        const QuadExt& a = psi.amplitude(i);
        if (is_zero(a)) continue;
        amps[PureState5::bits_of(i)] = {{"a", to_string(a.rat_part())}, {"b", to_string(a.surd_part())}};
    }
    doc["amplitudes"] = amps;
    return doc.dump(2);
}

QuadExt evaluate_invariant(const PureState5& psi, Invariant inv) {
    return evaluate_invariant(ground_form(psi.amplitudes()), inv).constant_term();
}

Fingerprint fingerprint(const PureState5& psi) {
    if (psi.is_zero()) throw InputError("cannot fingerprint the zero state");
    const auto f = ground_form(psi.amplitudes());
    Fingerprint fp;
    Covariant<QuadExt> bx;
    for (int s = 0; s < kSlots; ++s) {
        auto b = slot_quadratic(f, s);
        fp.nonzero[s] = !discriminant(b).is_zero();
        if (s == 0) bx = std::move(b);
    }
    const auto chain = covariant_chain(f);
    fp.nonzero[5] = !invariant_F_covariant(f, chain).is_zero();
    fp.nonzero[6] = !bx.is_zero();
    fp.nonzero[7] = !chain.c31111.is_zero();
    fp.nonzero[8] = !chain.e11111.is_zero();
    return fp;
}

std::vector<std::vector<Rational>> jacobian(std::span<const Invariant> invariants, const PureState5& point) {
    if (point.radicand() != 1) throw UnsupportedPoint("Jacobian points must have rational amplitudes");
    std::array<Jet, kAmplitudes> coords;
    for (int i = 0; i < kAmplitudes; ++i) coords[i] = Jet::coordinate(i, point.amplitude(i).rat_part());
    const auto f = ground_form(std::span<const Jet, kAmplitudes>(coords));

    std::vector<std::vector<Rational>> rows;
    for (Invariant inv : invariants) {
        Jet value = evaluate_invariant(f, inv).constant_term();
        rows.emplace_back(value.partials().begin(), value.partials().end());
    }
    return rows;
}

int jacobian_rank(std::span<const Invariant> invariants, const PureState5& point) {
    return exact_rank(jacobian(invariants, point));
}

}  // namespace q5
