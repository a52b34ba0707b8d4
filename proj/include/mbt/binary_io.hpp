#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

#include "mbt/error.hpp"

namespace mbt {

/// Appends little-endian encoded values to a byte string.
class BinaryWriter {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void raw(std::string_view s) { bytes_.append(s); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    raw(s);
  }

  /// Section: four-byte tag, u64 payload length, payload.
  void section(std::string_view tag, const BinaryWriter& payload) {
    raw(tag.substr(0, 4));
    u64(payload.bytes_.size());
    raw(payload.bytes_);
  }

  const std::string& bytes() const noexcept { return bytes_; }
  std::string take() && { return std::move(bytes_); }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  std::string bytes_;
};

/// Reads values written by BinaryWriter; throws ModelFormatError on
/// truncation.
class BinaryReader {
 public:
  explicit BinaryReader(std::string_view bytes) : bytes_(bytes) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(get(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string_view raw(std::size_t n) {
    need(n);
    auto out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::string str() { return std::string(raw(u32())); }

  /// Reads a section header, checks its tag and returns a reader over the
  /// payload.
  BinaryReader section(std::string_view tag) {
    auto got = raw(4);
    if (got != tag) throw ModelFormatError("expected section '" + std::string(tag) + "', found '" + std::string(got) + "'");
    auto len = u64();
    if (len > remaining()) throw ModelFormatError("section '" + std::string(tag) + "' is truncated");
    return BinaryReader(raw(static_cast<std::size_t>(len)));
  }

  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  bool done() const noexcept { return pos_ == bytes_.size(); }
  void expect_done(std::string_view what) const {
    if (!done()) throw ModelFormatError("trailing bytes in " + std::string(what));
  }

 private:
  void need(std::size_t n) const {
    if (n > remaining()) throw ModelFormatError("unexpected end of model data");
  }
  std::uint64_t get(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace mbt
