#pragma once

#include "dgaut/group.hpp"

namespace dgaut::catalog {

GroupPtr trivial();
GroupPtr cyclic(int n);
// direct product of cyclic groups of the given orders, in order
GroupPtr abelian(const std::vector<int> &orders, std::string name = "");
GroupPtr direct_product(const GroupPtr &a, const GroupPtr &b, std::string name = "");

// <a, b | a^m = 1, b^k = a^t, b a b^-1 = a^r>; requires r^k = 1 mod m and
// t(r - 1) = 0 mod m. Elements are a^i b^j in lexicographic (j, i) order.
GroupPtr metacyclic(int m, int k, int t, int r, std::string name);

GroupPtr dihedral(int n);   // order 2n, n >= 1
GroupPtr dicyclic(int n);   // order 4n, n >= 2; n = 2 gives Q8
GroupPtr symmetric(int n);  // via permutations, n <= 6
GroupPtr alternating(int n);

GroupPtr s3();
GroupPtr q8();
GroupPtr d8();
GroupPtr a4();
GroupPtr a5();

// semidirect N x| H where action[h] is an automorphism image array of N
GroupPtr semidirect_product(const GroupPtr &n, const GroupPtr &h,
                            const std::vector<std::vector<int>> &action, std::string name);

GroupPtr semidihedral16();
GroupPtr modular16();       // M4(2) = <a,b | a^8, b^2, bab^-1 = a^5>
GroupPtr central_product_d8_z4();
GroupPtr smallgroup_16_3(); // (Z4 x Z2) x| Z2, c: a -> ab
GroupPtr z4_semi_z4();

// <x,y,z | x^4 = y^4 = z^2 = 1, [x,y] = z, z central>, order 32
GroupPtr smallgroup_32_2();

// every isomorphism type of order <= 16 (42 groups), deterministic order
std::vector<GroupPtr> all_groups_up_to_16();

}  // namespace dgaut::catalog
