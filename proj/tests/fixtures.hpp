#pragma once

/*
 * Hand-frozen worked examples. Every constant below was written out by hand
 * and is treated as ground truth: the tests require the library to reproduce
 * each value byte for byte. Do not regenerate these from library output.
 */

#include <string>
#include <utility>
#include <vector>

namespace syt::fixtures {

// ---- 5x6 rectangle worked example -------------------------------------------

inline const std::vector<std::vector<int>> kFixtureBig = {
    {1, 2, 6, 9, 10, 15},
    {3, 5, 11, 17, 18, 22},
    {4, 8, 16, 21, 24, 27},
    {7, 12, 19, 23, 26, 28},
    {13, 14, 20, 25, 29, 30}};

inline const std::vector<int> kFixtureBigDesSet = {2,  3,  6,  10, 11, 12, 15,
                                                   18, 19, 22, 24, 27, 28};
inline constexpr int kFixtureBigAsc = 11;
inline constexpr long long kFixtureBigMaj = 197;

inline const std::string kFixtureBigArrows =
    "1 0 -\n1 1 -\n1 2 d\n1 3 d\n1 4 -\n1 5 d\n1 6 d\n"
    "2 0 u\n2 1 d\n2 2 udu\n2 3 dud\n2 4 -\n2 5 d\n2 6 d\n"
    "3 0 u\n3 1 ud\n3 2 udu\n3 3 ud\n3 4 ud\n3 5 d\n3 6 d\n"
    "4 0 u\n4 1 u\n4 2 du\n4 3 du\n4 4 ud\n4 5 u\n4 6 d\n"
    "5 0 u\n5 1 -\n5 2 u\n5 3 u\n5 4 u\n5 5 -\n5 6 -\n";

// Descent complement applied to row 3 only.
inline const std::vector<std::vector<int>> kFixtureBigPhiD3 = {
    {1, 2, 6, 9, 10, 15},
    {3, 5, 11, 17, 18, 23},
    {4, 8, 16, 21, 25, 26},
    {7, 12, 19, 22, 27, 28},
    {13, 14, 20, 24, 29, 30}};

inline const std::vector<std::vector<int>> kFixtureBigBounce = {{2, 2, 1, 1, 0},
                                                                {1, 1, 1, 3, 0},
                                                                {1, 3, 0, 1, 1},
                                                                {0, 0, 3, 0, 3},
                                                                {1, 0, 1, 1, 2}};

inline const std::vector<std::vector<int>> kFixtureBigPhiD3Bounce = {
    {2, 2, 1, 1, 0},
    {1, 1, 1, 2, 1},
    {1, 2, 1, 2, 0},
    {0, 1, 1, 1, 3},
    {1, 0, 2, 0, 2}};

// Full descent complement; des rises from 13 to 15 = (k-1)(n+1) - 13.
inline const std::vector<std::vector<int>> kFixtureBigPhiD = {
    {1, 4, 5, 7, 13, 19},
    {2, 6, 11, 15, 20, 24},
    {3, 10, 14, 17, 25, 26},
    {8, 12, 16, 18, 27, 29},
    {9, 21, 22, 23, 28, 30}};
inline constexpr int kFixtureBigPhiDDes = 15;

// Arrow reversal; des(rev) = 15 = asc + k - 1, asc(rev) = 9 = des - (k - 1).
inline const std::vector<std::vector<int>> kFixtureBigRev = {
    {1, 2, 7, 9, 10, 13},
    {3, 6, 11, 18, 19, 24},
    {4, 8, 14, 20, 25, 27},
    {5, 12, 17, 22, 26, 28},
    {15, 16, 21, 23, 29, 30}};
inline constexpr int kFixtureBigRevDes = 15;
inline constexpr int kFixtureBigRevAsc = 9;

// Ascent complement of the reversal, which must also equal rev(phi-d(T)).
inline const std::vector<std::vector<int>> kFixtureBigPhiARev = {
    {1, 3, 4, 9, 13, 17},
    {2, 7, 10, 16, 19, 21},
    {5, 8, 14, 18, 25, 26},
    {6, 12, 15, 20, 27, 29},
    {11, 22, 23, 24, 28, 30}};

// ---- staircase worked example ------------------------------------------------

inline const std::vector<std::vector<int>> kFixtureStair = {
    {1, 3, 4, 11, 13}, {2, 6, 8, 12}, {5, 9, 10}, {7, 15}, {14}};
inline constexpr int kFixtureStairAsc = 6;

inline const std::string kFixtureStairArrows =
    "1 0 -\n1 1 d\n1 2 -\n1 3 d\n1 4 d\n1 5 d\n"
    "2 0 u\n2 1 ud\n2 2 d\n2 3 du\n2 4 ud\n"
    "3 0 u\n3 1 udu\n3 2 -\n3 3 ud\n"
    "4 0 u\n4 1 ud\n4 2 d\n"
    "5 0 u\n5 1 u\n";

// Ascent complement on distinct-part shapes; asc sums to (2n-k)(k-1)/2 = 10.
inline const std::vector<std::vector<int>> kFixtureStairPhiA = {
    {1, 2, 5, 12, 13}, {3, 4, 8, 14}, {6, 9, 11}, {7, 10}, {15}};
inline constexpr int kFixtureStairPhiAAsc = 4;

// ---- why the complement needs the border bookkeeping --------------------------
//
// Blindly toggling leading/trailing arrows in one row produces arrays that
// break the right-border condition. Inputs with their true encodings, and the
// broken arrays the blind toggle would produce.

inline const std::vector<std::vector<int>> kFixtureNaiveDesInput = {{1, 2}, {3}, {4}};
inline const std::string kFixtureNaiveDesInputArrows =
    "1 0 -\n1 1 -\n1 2 d\n2 0 u\n2 1 d\n3 0 u\n3 1 -\n";
inline const std::string kFixtureNaiveDesBadArrows =
    "1 0 -\n1 1 d\n1 2 d\n2 0 u\n2 1 du\n3 0 u\n3 1 -\n";

inline const std::vector<std::vector<int>> kFixtureNaiveAscInput = {{1, 4}, {2}, {3}};
inline const std::string kFixtureNaiveAscInputArrows =
    "1 0 -\n1 1 d\n1 2 d\n2 0 u\n2 1 dud\n3 0 u\n3 1 u\n";
inline const std::string kFixtureNaiveAscBadArrows =
    "1 0 -\n1 1 d\n1 2 d\n2 0 u\n2 1 du\n3 0 u\n3 1 -\n";

// ---- two-row pair and its lattice-path shadow ---------------------------------

inline const std::vector<std::vector<int>> kFixtureK2Input = {
    {1, 2, 4, 6, 8, 9, 13}, {3, 5, 7, 10, 11, 12, 14}};
inline const std::vector<std::vector<int>> kFixtureK2Output = {
    {1, 2, 3, 4, 6, 11, 12}, {5, 7, 8, 9, 10, 13, 14}};

inline const std::string kFixtureK2Word = "UUDUDUDUUDDDUD";
inline const std::string kFixtureK2OutputWord = "UUUUDUDDDDUUDD";

// Peak coordinates (x = down-steps taken, y = up-steps taken). The output
// peaks are the complements: x' runs over {0..7} minus the input x list and
// y' over {0..7} minus the input y list.
inline const std::vector<std::pair<int, int>> kFixtureK2Peaks = {
    {0, 2}, {1, 3}, {2, 4}, {3, 6}, {6, 7}};
inline const std::vector<std::pair<int, int>> kFixtureK2OutputPeaks = {
    {0, 4}, {1, 5}, {5, 7}};

// ---- descent-transport chain on shape (4,3,2) ----------------------------------

inline const std::vector<std::vector<int>> kFixtureFInput = {
    {1, 2, 3, 9}, {4, 5, 7}, {6, 8}};
inline const std::vector<int> kFixtureFAscSet = {6, 8};

// One containment resort with S = {6,8}: blocks keep their cell sets.
inline const std::vector<std::vector<int>> kFixtureFResort = {
    {1, 4, 6, 9}, {2, 5, 8}, {3, 7}};
inline const std::vector<int> kFixtureFResortHDes = {6};

// Exact transport: high-descent set equals the input ascent set.
inline const std::vector<std::vector<int>> kFixtureFOutput = {
    {1, 3, 5, 8}, {2, 4, 6}, {7, 9}};
inline const std::vector<int> kFixtureFOutputHDes = {6, 8};

// ---- canon word ----------------------------------------------------------------

inline const std::string kFixtureCanonWord = "313321214424";
inline const std::vector<int> kFixtureCanonSigma = {3, 1, 2, 4};
inline const std::vector<std::vector<int>> kFixtureCanonTableau = {
    {1, 3, 4}, {2, 6, 8}, {5, 7, 11}, {9, 10, 12}};

// ---- micro fixtures --------------------------------------------------------------

inline const std::vector<std::vector<int>> kFixtureMinRect = {{1, 2}, {3, 4}};
inline const std::string kFixtureMinRectArrows =
    "1 0 -\n1 1 -\n1 2 d\n2 0 u\n2 1 -\n2 2 -\n";
inline const std::vector<std::vector<int>> kFixtureMinRectOther = {{1, 3}, {2, 4}};
inline const std::string kFixtureMinRectOtherArrows =
    "1 0 -\n1 1 d\n1 2 d\n2 0 u\n2 1 u\n2 2 -\n";

}  // namespace syt::fixtures
