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

#include "ansc/container.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace ansc {

namespace {

constexpr uint8_t kMagic[4] = {'A', 'N', 'S', 'C'};
constexpr uint64_t kMaxLetters = uint64_t(1) << 30;

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.push_back(uint8_t(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.push_back(uint8_t(v >> (8 * i)));
}

class Reader {
public:
    explicit Reader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    uint8_t u8(const char* field) {
        need(1, field);
        return bytes_[pos_++];
    }

    uint32_t u32(const char* field) {
        need(4, field);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= uint32_t(bytes_[pos_++]) << (8 * i);
        return v;
    }

    uint64_t u64(const char* field) {
        need(8, field);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= uint64_t(bytes_[pos_++]) << (8 * i);
        return v;
    }

    std::span<const uint8_t> raw(size_t count, const char* field) {
        need(count, field);
        auto out = bytes_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    size_t remaining() const { return bytes_.size() - pos_; }

private:
    void need(size_t count, const char* field) {
        if (bytes_.size() - pos_ < count)
            throw ContainerError(std::string("container truncated in ") +
                                 field);
    }

    std::span<const uint8_t> bytes_;
    size_t pos_ = 0;
};

} // namespace

std::vector<uint8_t> serialize_container(const ContainerInfo& info,
                                         const LifoBitBuffer& payload) {
    if (info.freqs.size() != info.sigma)
        throw ContractError("serialize_container: sigma/frequency mismatch");
    if (payload.bit_count() != info.payload_bits)
        throw ContractError("serialize_container: payload bit count mismatch");
    // Refuse to emit anything parse_container would reject.
    if (info.r < 1 || info.r > kMaxTableLog2)
        throw ContractError("serialize_container: r out of range");
    if (info.k > 8 || (info.codec != Codec::rans_fixed && info.k != 0))
        throw ContractError("serialize_container: bad k for codec");
    if (info.sigma < 1 || info.sigma > (uint64_t(1) << 24))
        throw ContractError("serialize_container: sigma out of range");
    if (info.n_letters > kMaxLetters)
        throw ContractError("serialize_container: letter count too large");
    std::vector<uint8_t> out;
    out.reserve(28 + 4 * info.freqs.size() + size_t(info.payload_bits / 8) + 1);
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    out.push_back(kContainerVersion);
    out.push_back(uint8_t(info.codec));
    out.push_back(uint8_t(info.r));
    out.push_back(uint8_t(info.k));
    put_u32(out, info.sigma);
    put_u64(out, info.n_letters);
    for (uint32_t f : info.freqs)
        put_u32(out, f);
    put_u64(out, info.final_state);
    put_u64(out, info.payload_bits);
    std::vector<uint8_t> bytes = payload.to_bytes();
    out.insert(out.end(), bytes.begin(), bytes.end());
    return out;
}

ParsedContainer parse_container(std::span<const uint8_t> bytes) {
    Reader in(bytes);
    ContainerInfo info;

    auto magic = in.raw(4, "magic");
    if (!std::equal(magic.begin(), magic.end(), std::begin(kMagic)))
        throw ContainerError("container magic mismatch");
    const uint8_t version = in.u8("version");
    if (version != kContainerVersion)
        throw ContainerError("unsupported container version");
    const uint8_t codec = in.u8("codec id");
    if (codec > uint8_t(Codec::rans_fixed))
        throw ContainerError("unknown codec id");
    info.codec = Codec(codec);
    info.r = in.u8("r");
    if (info.r < 1 || info.r > kMaxTableLog2)
        throw ContainerError("r out of range");
    info.k = in.u8("k");
    if (info.codec == Codec::rans_fixed) {
        if (info.k > 8)
            throw ContainerError("k out of range");
    } else if (info.k != 0) {
        throw ContainerError("nonzero k with a table codec");
    }
    info.sigma = in.u32("sigma");
    if (info.sigma < 1 || info.sigma > (uint64_t(1) << 24))
        throw ContainerError("sigma out of range");
    info.n_letters = in.u64("letter count");
    if (info.n_letters > kMaxLetters)
        throw ContainerError("letter count implausibly large");

    auto freq_bytes = in.raw(size_t(info.sigma) * 4, "frequency table");
    info.freqs.resize(info.sigma);
    uint64_t sum = 0;
    for (uint32_t a = 0; a < info.sigma; ++a) {
        uint32_t f = 0;
        for (int i = 0; i < 4; ++i)
            f |= uint32_t(freq_bytes[size_t(a) * 4 + i]) << (8 * i);
        info.freqs[a] = f;
        sum += f;
    }
    if (sum != uint64_t(1) << info.r)
        throw ContainerError("frequencies do not sum to 2^r");

    info.final_state = in.u64("final state");
    const uint64_t lo = initial_state(info.codec, info.k, info.r);
    if (info.final_state < lo || info.final_state >= 2 * lo)
        throw ContainerError("final state out of range");

    info.payload_bits = in.u64("payload bit count");
    const uint64_t payload_bytes = (info.payload_bits + 7) / 8;
    if (in.remaining() < payload_bytes)
        throw ContainerError("container truncated in payload");
    if (in.remaining() > payload_bytes)
        throw ContainerError("trailing bytes after payload");
    auto payload = in.raw(size_t(payload_bytes), "payload");

    ParsedContainer out{info,
                        LifoBitBuffer::from_bytes(payload, info.payload_bits)};
    return out;
}

std::vector<uint32_t> decode_letters(const ParsedContainer& parsed) {
    const ContainerInfo& info = parsed.info;
    std::vector<uint64_t> counts(info.freqs.begin(), info.freqs.end());
    FrequencyTable table = make_table(counts, info.r);
    LifoBitBuffer bits = parsed.payload;
    uint64_t end_state = 0;
    std::vector<uint32_t> letters =
        decode_stream(info.codec, info.k, info.final_state, bits,
                      info.n_letters, table, &end_state);
    if (bits.bits_unread() != 0)
        throw DecodeError("payload not fully consumed");
    // A complete unwind ends where the encoder started; anything else means
    // the stream does not match its header.
    if (end_state != initial_state(info.codec, info.k, info.r))
        throw DecodeError("decoder did not return to the initial state");
    return letters;
}

std::vector<uint8_t> encode_file_bytes(std::span<const uint8_t> data,
                                       Codec codec, uint32_t k, uint32_t r) {
    std::vector<uint32_t> letters(data.begin(), data.end());
    uint32_t sigma = 1;
    for (uint8_t b : data)
        sigma = std::max<uint32_t>(sigma, uint32_t(b) + 1);

    std::vector<uint64_t> raw = count_frequencies(letters, sigma);
    uint64_t distinct = 0;
    for (uint64_t c : raw)
        if (c > 0)
            ++distinct;

    if (r == 0) {
        r = 1;
        while ((uint64_t(1) << r) < distinct)
            ++r;
    }
    FrequencyTable table = data.empty()
                               ? FrequencyTable({uint32_t(1) << r}, r)
                               : normalize(raw, r);

    EncodedStream enc = encode_stream(codec, k, letters, table);
    ContainerInfo info;
    info.codec = codec;
    info.r = r;
    info.k = codec == Codec::rans_fixed ? k : 0;
    info.sigma = table.sigma();
    info.n_letters = letters.size();
    info.freqs.assign(table.freqs().begin(), table.freqs().end());
    info.final_state = enc.final_state;
    info.payload_bits = enc.bits.bit_count();
    return serialize_container(info, enc.bits);
}

std::vector<uint8_t> decode_file_bytes(std::span<const uint8_t> container) {
    ParsedContainer parsed = parse_container(container);
    if (parsed.info.sigma > 256)
        throw ContainerError("alphabet too large for byte output");
    std::vector<uint32_t> letters = decode_letters(parsed);
    std::vector<uint8_t> out;
    out.reserve(letters.size());
    for (uint32_t a : letters)
        out.push_back(uint8_t(a));
    return out;
}

} // namespace ansc
