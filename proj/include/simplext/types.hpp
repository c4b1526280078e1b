#ifndef SIMPLEXT_TYPES_HPP
#define SIMPLEXT_TYPES_HPP

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace simplext {

// Exact rational scalar used for all coordinates outside the m-gon path.
// cpp_rational keeps itself reduced with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

using NodeSet = boost::dynamic_bitset<>;

Rat rat_from_string(const std::string& s);   // "p/q" or "p"
std::string rat_to_string(const Rat& q);
Rat rat_from_double(double x);               // exact dyadic value of x

Rat dot(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);
bool is_zero(const RatVec& v);

// Scales v (optionally with an attached right-hand side) to a primitive
// integer vector, preserving orientation.
void make_primitive(RatVec& v);
void make_primitive(RatVec& normal, Rat& rhs);

std::vector<std::size_t> set_to_indices(const NodeSet& s);
NodeSet indices_to_set(std::size_t n, const std::vector<std::size_t>& idx);

}  // namespace simplext

#endif
