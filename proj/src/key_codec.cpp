#include "sssp/key_codec.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sssp {

namespace {

// Ordinals of +0.0f and the largest finite float; every non-negative finite
// float's bit pattern lies in [0, kMaxFiniteBits].
constexpr std::uint32_t kMaxFiniteBits = 0x7F7FFFFF;

float narrowed(double x, const char* what) {
    if (std::isnan(x)) throw std::domain_error(std::string(what) + " is NaN");
    if (std::signbit(x) && x != 0.0) throw std::domain_error(std::string(what) + " is negative");
    if (std::isinf(x)) throw std::domain_error(std::string(what) + " is infinite");
    auto f = static_cast<float>(x); // nearest-even; precision loss accepted
    if (std::isinf(f)) throw std::overflow_error(std::string(what) + " exceeds float32 range");
    return f == 0.0f ? 0.0f : f;
}

} // namespace

KeyCodec KeyCodec::float32_keys() {
    KeyCodec c;
    c.mode_ = KeyMode::float32;
    c.key_space_ = std::uint64_t(kMaxFiniteBits) + 1;
    return c;
}

KeyCodec KeyCodec::quantized_keys(unsigned mantissa_bits, unsigned exponent_bits) {
    if (mantissa_bits < 1 || mantissa_bits > 23)
        throw std::invalid_argument("quantized mantissa_bits must be in [1, 23]");
    if (exponent_bits < 1 || exponent_bits > 7)
        throw std::invalid_argument("quantized exponent_bits must be in [1, 7]");
    KeyCodec c;
    c.mode_ = KeyMode::quantized;
    c.mantissa_bits_ = mantissa_bits;
    c.exponent_bits_ = exponent_bits;
    c.bias_ = (1 << (exponent_bits - 1)) - 1;
    c.key_space_ = std::uint64_t(1) << (mantissa_bits + exponent_bits);
    return c;
}

KeyOrdinal KeyCodec::ordinal_of(double x) const {
    switch (mode_) {
    case KeyMode::integer: {
        if (std::isnan(x)) throw std::domain_error("key input is NaN");
        if (x < 0.0) throw std::domain_error("key input is negative");
        if (std::isinf(x)) throw std::domain_error("key input is infinite");
        if (x != std::floor(x)) throw std::domain_error("integer keys require integral input");
        if (x > static_cast<double>(max_key())) throw std::overflow_error("key exceeds key space");
        return static_cast<KeyOrdinal>(x);
    }
    case KeyMode::float32: {
        float f = narrowed(x, "key input");
        return std::bit_cast<std::uint32_t>(f);
    }
    case KeyMode::quantized: {
        float f = narrowed(x, "key input");
        if (f == 0.0f) return 0;
        int emin = 1 - bias_;
        double v = f;
        if (v < std::ldexp(1.0, emin)) {
            // Subnormal cell: uniform grid of 2^mantissa_bits steps below the
            // smallest normal value.
            return static_cast<KeyOrdinal>(std::ldexp(v, static_cast<int>(mantissa_bits_) - emin));
        }
        int bin_exp;
        double frac2 = 2.0 * std::frexp(v, &bin_exp); // frac2 in [1,2), v = frac2 * 2^(bin_exp-1)
        --bin_exp;
        int emax = (1 << exponent_bits_) - 1 - bias_;
        if (bin_exp > emax) throw std::overflow_error("key exceeds quantized key space");
        auto mant = static_cast<std::uint32_t>(std::ldexp(frac2 - 1.0, mantissa_bits_));
        auto biased = static_cast<std::uint32_t>(bin_exp - emin + 1);
        return (biased << mantissa_bits_) | mant;
    }
    }
    throw std::logic_error("unreachable");
}

double KeyCodec::value_of(KeyOrdinal k) const {
    if (k > max_key()) throw std::overflow_error("ordinal exceeds key space");
    switch (mode_) {
    case KeyMode::integer:
        return static_cast<double>(k);
    case KeyMode::float32:
        return static_cast<double>(std::bit_cast<float>(k));
    case KeyMode::quantized: {
        std::uint32_t mask = (std::uint32_t(1) << mantissa_bits_) - 1;
        std::uint32_t biased = k >> mantissa_bits_;
        std::uint32_t mant = k & mask;
        int emin = 1 - bias_;
        if (biased == 0) return std::ldexp(static_cast<double>(mant), emin - static_cast<int>(mantissa_bits_));
        double sig = static_cast<double>((std::uint32_t(1) << mantissa_bits_) | mant);
        return std::ldexp(sig, static_cast<int>(biased) - 1 + emin - static_cast<int>(mantissa_bits_));
    }
    }
    throw std::logic_error("unreachable");
}

KeyOrdinal KeyCodec::add_distance(KeyOrdinal d, double w) const {
    if (mode_ == KeyMode::integer) {
        if (w < 0.0 || std::isnan(w) || w != std::floor(w))
            throw std::domain_error("invalid integer weight");
        std::uint64_t sum = std::uint64_t(d) + static_cast<std::uint64_t>(w);
        if (sum > max_key()) throw std::overflow_error("distance exceeds integer key space");
        return static_cast<KeyOrdinal>(sum);
    }
    // Value-domain addition in float32, then re-encode; ordinals themselves
    // are not additive.
    if (std::isnan(w)) throw std::domain_error("weight is NaN");
    if (w < 0.0) throw std::domain_error("weight is negative");
    float sum = static_cast<float>(value_of(d)) + static_cast<float>(w);
    if (std::isinf(sum)) throw std::overflow_error("distance exceeds float32 range");
    return ordinal_of(sum);
}

std::string KeyCodec::describe() const {
    switch (mode_) {
    case KeyMode::integer: return "int";
    case KeyMode::float32: return "f32";
    case KeyMode::quantized:
        return "quant:" + std::to_string(mantissa_bits_) + ":" + std::to_string(exponent_bits_);
    }
    return "?";
}

} // namespace sssp
