#pragma once

#include "supercb/matrices.hpp"

#include <string>
#include <vector>

namespace supercb {

using Partition = std::vector<int>; // weakly decreasing positive parts

bool is_partition(const Partition& pi);
/* membership in the shape family: pi_{m+1} <= n */
bool partition_in_family(const Partition& pi, Shape sh);
std::vector<Partition> partitions_of(int r);
std::vector<Partition> partitions_in_family(int r, Shape sh);

/* rows of a filled Young diagram; entries in 1..m+n */
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    std::string str() const;
    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shape == b.shape && a.rows == b.rows;
    }
};

/* rows and columns weakly increase; entries <= m strictly increase down
 * columns; entries > m strictly increase along rows */
bool is_semistandard_super(const Tableau& t, Shape sh);

/* all fillings of shape pi and content mu, in row-reading lexicographic order */
std::vector<Tableau> enumerate_ssyt(const Partition& pi, const Comp& mu, Shape sh);

/* (pi_1..pi_m | conjugate of (pi_{m+1},...)), length m+n */
Comp pi_tilde(const Partition& pi, Shape sh);

/* the unique member of enumerate_ssyt(pi, pi_tilde(pi)) */
Tableau t_pi(const Partition& pi, Shape sh);

/* partial-sum dominance; requires equal sizes */
bool dominates(const Comp& a, const Comp& b);

struct TableauCount {
    long total = 0;
    std::vector<std::pair<Comp, long>> by_content;
};
TableauCount count_tableaux(const Partition& pi, Shape sh);

} // namespace supercb
