#pragma once

#include <cstdint>
#include <string>

namespace sssp {

/// Bucket index: unsigned key in [0, key_space_size).
using KeyOrdinal = std::uint32_t;

enum class KeyMode { integer, float32, quantized };

/// Order-preserving map between weight-domain values and the unsigned key
/// space the bucket queues index.
///
///   integer    — identity on [0, 2^32).
///   float32    — a non-negative finite float's ordinal is the count of
///                admissible values below it, which for IEEE-754 is exactly
///                its bit pattern (mantissa + biased_exponent * 2^23).
///   quantized  — reduced-precision variant: values are truncated onto a
///                miniature float format with the configured mantissa and
///                exponent budgets (IEEE-style bias, subnormals, no
///                infinity/NaN encodings), shrinking the key space to
///                2^(mantissa_bits+exponent_bits).
///
/// Immutable; all operations are pure and safe to share across threads.
class KeyCodec {
public:
    KeyCodec() = default; // integer keys

    static KeyCodec integer_keys() { return KeyCodec(); }
    static KeyCodec float32_keys();
    /// Requires 1 <= mantissa_bits <= 23 and 1 <= exponent_bits <= 7 so that
    /// every cell edge is exactly representable as a 32-bit float.
    static KeyCodec quantized_keys(unsigned mantissa_bits, unsigned exponent_bits);

    KeyMode mode() const { return mode_; }
    bool integer_mode() const { return mode_ == KeyMode::integer; }
    unsigned mantissa_bits() const { return mantissa_bits_; }
    unsigned exponent_bits() const { return exponent_bits_; }

    /// Number of distinct ordinals; the bucket queue's array size.
    std::uint64_t key_space_size() const { return key_space_; }
    KeyOrdinal max_key() const { return static_cast<KeyOrdinal>(key_space_ - 1); }

    /// Encode a weight or distance. Strictly order-preserving in integer and
    /// float32 modes, weakly in quantized mode (truncation). ordinal_of(0)=0.
    /// Throws std::domain_error for negative/NaN/infinite input and
    /// std::overflow_error when the value exceeds the key space.
    KeyOrdinal ordinal_of(double x) const;

    /// Inverse of ordinal_of in integer/float32 modes; the lower edge of the
    /// quantization cell in quantized mode.
    double value_of(KeyOrdinal k) const;

    /// Key of distance d advanced by weight w: d + w in integer mode
    /// (throws std::overflow_error past max_key), ordinal_of(value_of(d) + w)
    /// in the float modes.
    KeyOrdinal add_distance(KeyOrdinal d, double w) const;

    /// Codec spelling used by the CLI: "int", "f32", or "quant:<m>:<e>".
    std::string describe() const;

private:
    KeyMode mode_ = KeyMode::integer;
    unsigned mantissa_bits_ = 0;
    unsigned exponent_bits_ = 0;
    int bias_ = 0;
    std::uint64_t key_space_ = std::uint64_t(1) << 32;
};

} // namespace sssp
