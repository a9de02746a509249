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

#include "ansc/codec.hpp"

namespace ansc {

const char* codec_name(Codec codec) {
    switch (codec) {
    case Codec::tans_simplified:
        return "tans-simplified";
    case Codec::tans_precise:
        return "tans-precise";
    case Codec::rans_fixed:
        return "rans";
    }
    return "unknown";
}

std::optional<Codec> codec_from_name(std::string_view name) {
    if (name == "tans-simplified")
        return Codec::tans_simplified;
    if (name == "tans-precise")
        return Codec::tans_precise;
    if (name == "rans")
        return Codec::rans_fixed;
    return std::nullopt;
}

EncodedStream encode_stream(Codec codec, uint32_t k,
                            std::span<const uint32_t> seq,
                            const FrequencyTable& table) {
    EncodedStream out;
    if (codec == Codec::rans_fixed) {
        RansParams params{table.r(), k};
        RansEncoding enc = rans_encode(seq, table, params);
        out.final_state = enc.final_state;
        out.bits = std::move(enc.bits);
        out.state_bits = params.state_log2() + 1;
        return out;
    }
    if (k != 0)
        throw ContractError("encode_stream: table coder requires k == 0");
    SpreadTable spread = codec == Codec::tans_simplified
                             ? spread_simplified(table)
                             : spread_precise(table);
    TansEncoding enc = tans_encode(seq, table, spread);
    out.final_state = enc.final_state;
    out.bits = std::move(enc.bits);
    out.state_bits = table.r() + 1;
    return out;
}

std::vector<uint32_t> decode_stream(Codec codec, uint32_t k,
                                    uint64_t final_state, LifoBitBuffer& bits,
                                    uint64_t n_letters,
                                    const FrequencyTable& table,
                                    uint64_t* end_state) {
    if (codec == Codec::rans_fixed) {
        RansParams params{table.r(), k};
        return rans_decode(final_state, bits, n_letters, table, params,
                           end_state);
    }
    if (k != 0)
        throw ContractError("decode_stream: table coder requires k == 0");
    SpreadTable spread = codec == Codec::tans_simplified
                             ? spread_simplified(table)
                             : spread_precise(table);
    DecodeTable dec = build_decode_table(spread, table);
    return tans_decode(final_state, bits, n_letters, dec, end_state);
}

uint64_t initial_state(Codec codec, uint32_t k, uint32_t r) {
    return uint64_t(1) << (codec == Codec::rans_fixed ? r + k : r);
}

} // namespace ansc
