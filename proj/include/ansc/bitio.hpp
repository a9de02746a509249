/*
Copyright 2026 the ansc authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ansc/errors.hpp"

namespace ansc {

// Last-in-first-out buffer of variable-width bit groups.
//
// write_bits() appends the `width` low bits of `value`; read_bits() consumes
// groups starting from the most recently written one.  Groups are atomic: a
// group written with width w must be read back with the same w.  Widths are
// never stored; the coder that reads a stream derives them from its own state.
// Bit i (in write order) lives at byte i/8, bit position i%8, so the packed
// form is LSB-first within each byte.  Zero-width groups are legal no-ops.
class LifoBitBuffer {
public:
    LifoBitBuffer() = default;

    void write_bits(uint64_t value, unsigned width) {
        if (width > 64)
            throw ContractError("write_bits: width exceeds 64");
        if (width < 64 && (value >> width) != 0)
            throw ContractError("write_bits: value does not fit in width");
        bytes_.resize(size_t((bit_count_ + width + 7) >> 3), 0);
        uint64_t pos = bit_count_;
        unsigned left = width;
        while (left > 0) {
            unsigned used = unsigned(pos & 7);
            unsigned take = 8 - used;
            if (take > left)
                take = left;
            bytes_[size_t(pos >> 3)] |=
                uint8_t((value & ((uint64_t(1) << take) - 1)) << used);
            value >>= take;
            pos += take;
            left -= take;
        }
        bit_count_ += width;
        read_pos_ = bit_count_;
    }

    uint64_t read_bits(unsigned width) {
        if (width > 64)
            throw ContractError("read_bits: width exceeds 64");
        if (read_pos_ < width)
            throw DecodeError("read_bits: bit buffer underflow");
        uint64_t pos = read_pos_ - width;
        read_pos_ = pos;
        uint64_t value = 0;
        unsigned got = 0;
        while (got < width) {
            unsigned off = unsigned(pos & 7);
            unsigned take = 8 - off;
            if (take > width - got)
                take = width - got;
            uint64_t piece = (bytes_[size_t(pos >> 3)] >> off) &
                             ((uint64_t(1) << take) - 1);
            value |= piece << got;
            got += take;
            pos += take;
        }
        return value;
    }

    uint64_t bit_count() const { return bit_count_; }

    // Bits not yet consumed by read_bits, counted from the front.
    uint64_t bits_unread() const { return read_pos_; }

    void reset_read() { read_pos_ = bit_count_; }

    // ceil(bit_count/8) bytes; pad bits in the last byte are zero.
    std::vector<uint8_t> to_bytes() const { return bytes_; }

    static LifoBitBuffer from_bytes(std::span<const uint8_t> bytes,
                                    uint64_t bit_count) {
        if (bit_count > uint64_t(bytes.size()) * 8)
            throw ContractError("from_bytes: bit count exceeds byte data");
        LifoBitBuffer buf;
        buf.bytes_.assign(bytes.begin(),
                          bytes.begin() + size_t((bit_count + 7) >> 3));
        // Canonicalize pad bits so buffers compare by content.
        if (bit_count & 7)
            buf.bytes_.back() &= uint8_t((1u << (bit_count & 7)) - 1);
        buf.bit_count_ = bit_count;
        buf.read_pos_ = bit_count;
        return buf;
    }

    bool operator==(const LifoBitBuffer& other) const {
        return bit_count_ == other.bit_count_ && bytes_ == other.bytes_;
    }

private:
    std::vector<uint8_t> bytes_;
    uint64_t bit_count_ = 0;
    uint64_t read_pos_ = 0;
};

} // namespace ansc
