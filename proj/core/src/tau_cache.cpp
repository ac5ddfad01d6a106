/*
   Copyright 2026 The idealcount Authors

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

#include <array>
#include <cstring>
#include <fstream>

#include "idealcount/errors.hpp"
#include "idealcount/ideal_counter.hpp"

namespace idealcount {
namespace {

constexpr std::array<char, 8> kMagic = {'I', 'D', 'C', 'T', 'A', 'U', '\0', '\0'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Hash of the invariants only; warnings do not affect the table.
std::uint64_t field_hash(const FieldSpec& f) {
  FieldSpec copy = f;
  copy.warnings.clear();
  return fnv1a(serialize_field(copy));
}

void put_le(std::ostream& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

bool get_le(std::istream& in, std::uint64_t& v, int bytes) {
  v = 0;
  for (int i = 0; i < bytes; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) return false;
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return true;
}

}  // namespace

void save_tau_cache(const TauTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write tau cache " + path);
  out.write(kMagic.data(), kMagic.size());
  put_le(out, kVersion, 4);
  put_le(out, 0, 4);
  put_le(out, field_hash(table.field()), 8);
  put_le(out, table.X(), 8);
  const auto& tau = table.tau_values();
  std::vector<char> buf;
  buf.reserve(4 * (tau.size() - 1));
  for (std::size_t m = 1; m < tau.size(); ++m)
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((tau[m] >> (8 * i)) & 0xff));
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error("failed writing tau cache " + path);
}

std::optional<TauTable> load_tau_cache(const FieldSpec& field, std::uint64_t X, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) return std::nullopt;
  std::uint64_t version = 0, reserved = 0, hash = 0, cached_x = 0;
  if (!get_le(in, version, 4) || !get_le(in, reserved, 4) || !get_le(in, hash, 8) || !get_le(in, cached_x, 8))
    return std::nullopt;
  if (version != kVersion || hash != field_hash(field) || cached_x < X) return std::nullopt;
  std::vector<char> buf(4 * X);
  in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::uint64_t>(in.gcount()) != buf.size()) return std::nullopt;
  std::vector<std::uint32_t> tau(X + 1, 0);
  for (std::uint64_t m = 1; m <= X; ++m) {
    const auto* b = reinterpret_cast<const unsigned char*>(buf.data() + 4 * (m - 1));
    tau[m] = static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
             static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
  }
  return TauTable(field, std::move(tau));
}

}  // namespace idealcount
