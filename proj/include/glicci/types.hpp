#ifndef GLICCI_TYPES_HPP
#define GLICCI_TYPES_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace glicci {

// A face of a complex on the ground set [n] = {1,...,n}, encoded as an
// n-bit mask with vertex v stored in bit v-1.  The empty face is mask 0.
using mask_t = std::uint32_t;

// Ground sets larger than this are rejected at construction time.
inline constexpr int kMaxGroundSet = 30;

inline int popcount(mask_t m) { return std::popcount(m); }

inline mask_t vertex_bit(int v) { return mask_t{1} << (v - 1); }

inline bool contains_vertex(mask_t m, int v) { return (m & vertex_bit(v)) != 0; }

inline mask_t full_mask(int n) { return n == 0 ? 0 : (mask_t{1} << n) - 1; }

mask_t mask_of_vertices(const std::vector<int>& verts, int n);
std::vector<int> vertices_of_mask(mask_t m);
std::string mask_to_string(mask_t m);   // "{1,2,5}" or "{}" for the empty face

// --- error types -----------------------------------------------------------
//
// Mathematical negatives are return values; exceptions are reserved for
// contract violations, bad input and guard overruns.

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct vertex_out_of_range : error { using error::error; };
struct empty_input : error { using error::error; };
struct not_a_face : error { using error::error; };
struct apex_exists : error { using error::error; };
struct dimension_out_of_range : error { using error::error; };
struct unit_ideal : error { using error::error; };
struct variable_collision : error { using error::error; };
struct not_subideal : error { using error::error; };
struct size_guard_exceeded : error { using error::error; };
struct not_cohen_macaulay : error { using error::error; };
struct not_pure : error { using error::error; };
struct empty_complex : error { using error::error; };
struct not_2cm : error { using error::error; };
struct wrong_codim : error { using error::error; };
struct search_exhausted : error { using error::error; };
struct not_a_shelling : error { using error::error; };
struct no_route_available : error { using error::error; };
struct invalid_field : error { using error::error; };
struct parse_error : error { using error::error; };

}  // namespace glicci

#endif
