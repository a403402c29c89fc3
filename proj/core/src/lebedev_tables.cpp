// Generated by scripts/gen_lebedev.py. Do not edit by hand.
// Lebedev-Laikov nodes on the unit sphere; weights normalized to sum 1.

#include "symprobe/lebedev.hpp"

namespace symprobe::detail {
namespace {

constexpr LebedevNode kLebedev3[] = {
    {1, 0, 0, 0.16666666666666666},
    {-1, 0, 0, 0.16666666666666666},
    {0, 1, 0, 0.16666666666666666},
    {0, -1, 0, 0.16666666666666666},
    {0, 0, 1, 0.16666666666666666},
    {0, 0, -1, 0.16666666666666666},
};

constexpr LebedevNode kLebedev5[] = {
    {1, 0, 0, 0.066666666666666666},
    {-1, 0, 0, 0.066666666666666666},
    {0, 1, 0, 0.066666666666666666},
    {0, -1, 0, 0.066666666666666666},
    {0, 0, 1, 0.066666666666666666},
    {0, 0, -1, 0.066666666666666666},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
};

constexpr LebedevNode kLebedev7[] = {
    {1, 0, 0, 0.047619047619047623},
    {-1, 0, 0, 0.047619047619047623},
    {0, 1, 0, 0.047619047619047623},
    {0, -1, 0, 0.047619047619047623},
    {0, 0, 1, 0.047619047619047623},
    {0, 0, -1, 0.047619047619047623},
    {0, 0.70710678118654757, 0.70710678118654757, 0.038095238095238099},
    {0, -0.70710678118654757, 0.70710678118654757, 0.038095238095238099},
    {0, 0.70710678118654757, -0.70710678118654757, 0.038095238095238099},
    {0, -0.70710678118654757, -0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0, 0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0, -0.70710678118654757, 0.038095238095238099},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.038095238095238099},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0.70710678118654757, 0, 0.038095238095238099},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.038095238095238099},
    {0.70710678118654757, -0.70710678118654757, 0, 0.038095238095238099},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.038095238095238099},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
};

constexpr LebedevNode kLebedev9[] = {
    {1, 0, 0, 0.0095238095238095247},
    {-1, 0, 0, 0.0095238095238095247},
    {0, 1, 0, 0.0095238095238095247},
    {0, -1, 0, 0.0095238095238095247},
    {0, 0, 1, 0.0095238095238095247},
    {0, 0, -1, 0.0095238095238095247},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {0.4597008433809831, 0.88807383397711526, 0, 0.028571428571428571},
    {-0.4597008433809831, 0.88807383397711526, 0, 0.028571428571428571},
    {0.4597008433809831, -0.88807383397711526, 0, 0.028571428571428571},
    {-0.4597008433809831, -0.88807383397711526, 0, 0.028571428571428571},
    {0.88807383397711526, 0.4597008433809831, 0, 0.028571428571428571},
    {-0.88807383397711526, 0.4597008433809831, 0, 0.028571428571428571},
    {0.88807383397711526, -0.4597008433809831, 0, 0.028571428571428571},
    {-0.88807383397711526, -0.4597008433809831, 0, 0.028571428571428571},
    {0.4597008433809831, 0, 0.88807383397711526, 0.028571428571428571},
    {-0.4597008433809831, 0, 0.88807383397711526, 0.028571428571428571},
    {0.4597008433809831, 0, -0.88807383397711526, 0.028571428571428571},
    {-0.4597008433809831, 0, -0.88807383397711526, 0.028571428571428571},
    {0.88807383397711526, 0, 0.4597008433809831, 0.028571428571428571},
    {-0.88807383397711526, 0, 0.4597008433809831, 0.028571428571428571},
    {0.88807383397711526, 0, -0.4597008433809831, 0.028571428571428571},
    {-0.88807383397711526, 0, -0.4597008433809831, 0.028571428571428571},
    {0, 0.4597008433809831, 0.88807383397711526, 0.028571428571428571},
    {0, -0.4597008433809831, 0.88807383397711526, 0.028571428571428571},
    {0, 0.4597008433809831, -0.88807383397711526, 0.028571428571428571},
    {0, -0.4597008433809831, -0.88807383397711526, 0.028571428571428571},
    {0, 0.88807383397711526, 0.4597008433809831, 0.028571428571428571},
    {0, -0.88807383397711526, 0.4597008433809831, 0.028571428571428571},
    {0, 0.88807383397711526, -0.4597008433809831, 0.028571428571428571},
    {0, -0.88807383397711526, -0.4597008433809831, 0.028571428571428571},
};

constexpr LebedevNode kLebedev11[] = {
    {1, 0, 0, 0.0126984126984127},
    {-1, 0, 0, 0.0126984126984127},
    {0, 1, 0, 0.0126984126984127},
    {0, -1, 0, 0.0126984126984127},
    {0, 0, 1, 0.0126984126984127},
    {0, 0, -1, 0.0126984126984127},
    {0, 0.70710678118654757, 0.70710678118654757, 0.02257495590828924},
    {0, -0.70710678118654757, 0.70710678118654757, 0.02257495590828924},
    {0, 0.70710678118654757, -0.70710678118654757, 0.02257495590828924},
    {0, -0.70710678118654757, -0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0, 0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0, -0.70710678118654757, 0.02257495590828924},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.02257495590828924},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0.70710678118654757, 0, 0.02257495590828924},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.02257495590828924},
    {0.70710678118654757, -0.70710678118654757, 0, 0.02257495590828924},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.02257495590828924},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
};

constexpr LebedevNode kLebedev13[] = {
    {1, 0, 0, 0.00051306717973384638},
    {-1, 0, 0, 0.00051306717973384638},
    {0, 1, 0, 0.00051306717973384638},
    {0, -1, 0, 0.00051306717973384638},
    {0, 0, 1, 0.00051306717973384638},
    {0, 0, -1, 0.00051306717973384638},
    {0, 0.70710678118654757, 0.70710678118654757, 0.016604069565742039},
    {0, -0.70710678118654757, 0.70710678118654757, 0.016604069565742039},
    {0, 0.70710678118654757, -0.70710678118654757, 0.016604069565742039},
    {0, -0.70710678118654757, -0.70710678118654757, 0.016604069565742039},
    {0.70710678118654757, 0, 0.70710678118654757, 0.016604069565742039},
    {0.70710678118654757, 0, -0.70710678118654757, 0.016604069565742039},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.016604069565742039},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.016604069565742039},
    {0.70710678118654757, 0.70710678118654757, 0, 0.016604069565742039},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.016604069565742039},
    {0.70710678118654757, -0.70710678118654757, 0, 0.016604069565742039},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.016604069565742039},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {0.48038446141526142, 0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, 0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {0.48038446141526142, -0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {0.48038446141526142, 0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, -0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, 0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {0.48038446141526142, -0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, -0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, 0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, -0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, 0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {-0.48038446141526142, -0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {-0.48038446141526142, 0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, -0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {-0.48038446141526142, -0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, 0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, 0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, 0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, -0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, 0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, -0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, 0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, -0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, -0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {0.3207726489807764, 0.94715622136258792, 0, 0.01652217099371571},
    {-0.3207726489807764, 0.94715622136258792, 0, 0.01652217099371571},
    {0.3207726489807764, -0.94715622136258792, 0, 0.01652217099371571},
    {-0.3207726489807764, -0.94715622136258792, 0, 0.01652217099371571},
    {0.94715622136258792, 0.3207726489807764, 0, 0.01652217099371571},
    {-0.94715622136258792, 0.3207726489807764, 0, 0.01652217099371571},
    {0.94715622136258792, -0.3207726489807764, 0, 0.01652217099371571},
    {-0.94715622136258792, -0.3207726489807764, 0, 0.01652217099371571},
    {0.3207726489807764, 0, 0.94715622136258792, 0.01652217099371571},
    {-0.3207726489807764, 0, 0.94715622136258792, 0.01652217099371571},
    {0.3207726489807764, 0, -0.94715622136258792, 0.01652217099371571},
    {-0.3207726489807764, 0, -0.94715622136258792, 0.01652217099371571},
    {0.94715622136258792, 0, 0.3207726489807764, 0.01652217099371571},
    {-0.94715622136258792, 0, 0.3207726489807764, 0.01652217099371571},
    {0.94715622136258792, 0, -0.3207726489807764, 0.01652217099371571},
    {-0.94715622136258792, 0, -0.3207726489807764, 0.01652217099371571},
    {0, 0.3207726489807764, 0.94715622136258792, 0.01652217099371571},
    {0, -0.3207726489807764, 0.94715622136258792, 0.01652217099371571},
    {0, 0.3207726489807764, -0.94715622136258792, 0.01652217099371571},
    {0, -0.3207726489807764, -0.94715622136258792, 0.01652217099371571},
    {0, 0.94715622136258792, 0.3207726489807764, 0.01652217099371571},
    {0, -0.94715622136258792, 0.3207726489807764, 0.01652217099371571},
    {0, 0.94715622136258792, -0.3207726489807764, 0.01652217099371571},
    {0, -0.94715622136258792, -0.3207726489807764, 0.01652217099371571},
};

constexpr LebedevNode kLebedev15[] = {
    {1, 0, 0, 0.011544011544011539},
    {-1, 0, 0, 0.011544011544011539},
    {0, 1, 0, 0.011544011544011539},
    {0, -1, 0, 0.011544011544011539},
    {0, 0, 1, 0.011544011544011539},
    {0, 0, -1, 0.011544011544011539},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {0.3696028464541502, 0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, 0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {0.3696028464541502, -0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {0.3696028464541502, 0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, -0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, 0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {0.3696028464541502, -0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, -0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, 0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, -0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, 0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {-0.3696028464541502, -0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {-0.3696028464541502, 0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, -0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {-0.3696028464541502, -0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, 0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, 0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, 0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, -0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, 0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, -0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, 0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, -0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, -0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {0.69435400660266644, 0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, 0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {0.69435400660266644, -0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {0.69435400660266644, 0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, -0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, 0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {0.69435400660266644, -0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, -0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, 0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, -0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, 0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {-0.69435400660266644, -0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {-0.69435400660266644, 0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, -0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {-0.69435400660266644, -0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, 0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, 0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, 0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, -0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, 0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, -0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, 0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, -0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, -0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {0.37424303909034118, 0.92733065715117247, 0, 0.011812303746904479},
    {-0.37424303909034118, 0.92733065715117247, 0, 0.011812303746904479},
    {0.37424303909034118, -0.92733065715117247, 0, 0.011812303746904479},
    {-0.37424303909034118, -0.92733065715117247, 0, 0.011812303746904479},
    {0.92733065715117247, 0.37424303909034118, 0, 0.011812303746904479},
    {-0.92733065715117247, 0.37424303909034118, 0, 0.011812303746904479},
    {0.92733065715117247, -0.37424303909034118, 0, 0.011812303746904479},
    {-0.92733065715117247, -0.37424303909034118, 0, 0.011812303746904479},
    {0.37424303909034118, 0, 0.92733065715117247, 0.011812303746904479},
    {-0.37424303909034118, 0, 0.92733065715117247, 0.011812303746904479},
    {0.37424303909034118, 0, -0.92733065715117247, 0.011812303746904479},
    {-0.37424303909034118, 0, -0.92733065715117247, 0.011812303746904479},
    {0.92733065715117247, 0, 0.37424303909034118, 0.011812303746904479},
    {-0.92733065715117247, 0, 0.37424303909034118, 0.011812303746904479},
    {0.92733065715117247, 0, -0.37424303909034118, 0.011812303746904479},
    {-0.92733065715117247, 0, -0.37424303909034118, 0.011812303746904479},
    {0, 0.37424303909034118, 0.92733065715117247, 0.011812303746904479},
    {0, -0.37424303909034118, 0.92733065715117247, 0.011812303746904479},
    {0, 0.37424303909034118, -0.92733065715117247, 0.011812303746904479},
    {0, -0.37424303909034118, -0.92733065715117247, 0.011812303746904479},
    {0, 0.92733065715117247, 0.37424303909034118, 0.011812303746904479},
    {0, -0.92733065715117247, 0.37424303909034118, 0.011812303746904479},
    {0, 0.92733065715117247, -0.37424303909034118, 0.011812303746904479},
    {0, -0.92733065715117247, -0.37424303909034118, 0.011812303746904479},
};

constexpr LebedevNode kLebedev17[] = {
    {1, 0, 0, 0.0038282704949371611},
    {-1, 0, 0, 0.0038282704949371611},
    {0, 1, 0, 0.0038282704949371611},
    {0, -1, 0, 0.0038282704949371611},
    {0, 0, 1, 0.0038282704949371611},
    {0, 0, -1, 0.0038282704949371611},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {0.47836902881215021, 0.87815891060406615, 0, 0.0096949963616630268},
    {-0.47836902881215021, 0.87815891060406615, 0, 0.0096949963616630268},
    {0.47836902881215021, -0.87815891060406615, 0, 0.0096949963616630268},
    {-0.47836902881215021, -0.87815891060406615, 0, 0.0096949963616630268},
    {0.87815891060406615, 0.47836902881215021, 0, 0.0096949963616630268},
    {-0.87815891060406615, 0.47836902881215021, 0, 0.0096949963616630268},
    {0.87815891060406615, -0.47836902881215021, 0, 0.0096949963616630268},
    {-0.87815891060406615, -0.47836902881215021, 0, 0.0096949963616630268},
    {0.47836902881215021, 0, 0.87815891060406615, 0.0096949963616630268},
    {-0.47836902881215021, 0, 0.87815891060406615, 0.0096949963616630268},
    {0.47836902881215021, 0, -0.87815891060406615, 0.0096949963616630268},
    {-0.47836902881215021, 0, -0.87815891060406615, 0.0096949963616630268},
    {0.87815891060406615, 0, 0.47836902881215021, 0.0096949963616630268},
    {-0.87815891060406615, 0, 0.47836902881215021, 0.0096949963616630268},
    {0.87815891060406615, 0, -0.47836902881215021, 0.0096949963616630268},
    {-0.87815891060406615, 0, -0.47836902881215021, 0.0096949963616630268},
    {0, 0.47836902881215021, 0.87815891060406615, 0.0096949963616630268},
    {0, -0.47836902881215021, 0.87815891060406615, 0.0096949963616630268},
    {0, 0.47836902881215021, -0.87815891060406615, 0.0096949963616630268},
    {0, -0.47836902881215021, -0.87815891060406615, 0.0096949963616630268},
    {0, 0.87815891060406615, 0.47836902881215021, 0.0096949963616630268},
    {0, -0.87815891060406615, 0.47836902881215021, 0.0096949963616630268},
    {0, 0.87815891060406615, -0.47836902881215021, 0.0096949963616630268},
    {0, -0.87815891060406615, -0.47836902881215021, 0.0096949963616630268},
};

constexpr LebedevNode kLebedev19[] = {
    {1, 0, 0, 0.00059963136886213809},
    {-1, 0, 0, 0.00059963136886213809},
    {0, 1, 0, 0.00059963136886213809},
    {0, -1, 0, 0.00059963136886213809},
    {0, 0, 1, 0.00059963136886213809},
    {0, 0, -1, 0.00059963136886213809},
    {0, 0.70710678118654757, 0.70710678118654757, 0.0073729997186207557},
    {0, -0.70710678118654757, 0.70710678118654757, 0.0073729997186207557},
    {0, 0.70710678118654757, -0.70710678118654757, 0.0073729997186207557},
    {0, -0.70710678118654757, -0.70710678118654757, 0.0073729997186207557},
    {0.70710678118654757, 0, 0.70710678118654757, 0.0073729997186207557},
    {0.70710678118654757, 0, -0.70710678118654757, 0.0073729997186207557},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.0073729997186207557},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.0073729997186207557},
    {0.70710678118654757, 0.70710678118654757, 0, 0.0073729997186207557},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.0073729997186207557},
    {0.70710678118654757, -0.70710678118654757, 0, 0.0073729997186207557},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.0073729997186207557},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0072105153601444878},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0072105153601444878},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0072105153601444878},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0072105153601444878},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0072105153601444878},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0072105153601444878},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0072105153601444878},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0072105153601444878},
    {0.67644104001142635, 0.67644104001142635, 0.29129888220952682, 0.007116355493117555},
    {-0.67644104001142635, 0.67644104001142635, 0.29129888220952682, 0.007116355493117555},
    {0.67644104001142635, -0.67644104001142635, 0.29129888220952682, 0.007116355493117555},
    {0.67644104001142635, 0.67644104001142635, -0.29129888220952682, 0.007116355493117555},
    {-0.67644104001142635, -0.67644104001142635, 0.29129888220952682, 0.007116355493117555},
    {-0.67644104001142635, 0.67644104001142635, -0.29129888220952682, 0.007116355493117555},
    {0.67644104001142635, -0.67644104001142635, -0.29129888220952682, 0.007116355493117555},
    {-0.67644104001142635, -0.67644104001142635, -0.29129888220952682, 0.007116355493117555},
    {-0.67644104001142635, 0.29129888220952682, 0.67644104001142635, 0.007116355493117555},
    {0.67644104001142635, -0.29129888220952682, 0.67644104001142635, 0.007116355493117555},
    {0.67644104001142635, 0.29129888220952682, -0.67644104001142635, 0.007116355493117555},
    {-0.67644104001142635, -0.29129888220952682, 0.67644104001142635, 0.007116355493117555},
    {-0.67644104001142635, 0.29129888220952682, -0.67644104001142635, 0.007116355493117555},
    {0.67644104001142635, -0.29129888220952682, -0.67644104001142635, 0.007116355493117555},
    {-0.67644104001142635, -0.29129888220952682, -0.67644104001142635, 0.007116355493117555},
    {0.67644104001142635, 0.29129888220952682, 0.67644104001142635, 0.007116355493117555},
    {0.29129888220952682, 0.67644104001142635, 0.67644104001142635, 0.007116355493117555},
    {-0.29129888220952682, 0.67644104001142635, 0.67644104001142635, 0.007116355493117555},
    {0.29129888220952682, -0.67644104001142635, 0.67644104001142635, 0.007116355493117555},
    {0.29129888220952682, 0.67644104001142635, -0.67644104001142635, 0.007116355493117555},
    {-0.29129888220952682, -0.67644104001142635, 0.67644104001142635, 0.007116355493117555},
    {-0.29129888220952682, 0.67644104001142635, -0.67644104001142635, 0.007116355493117555},
    {0.29129888220952682, -0.67644104001142635, -0.67644104001142635, 0.007116355493117555},
    {-0.29129888220952682, -0.67644104001142635, -0.67644104001142635, 0.007116355493117555},
    {0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.0067538294863144768},
    {-0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.0067538294863144768},
    {0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.0067538294863144768},
    {0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.0067538294863144768},
    {-0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.0067538294863144768},
    {-0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.0067538294863144768},
    {0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.0067538294863144768},
    {-0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.0067538294863144768},
    {-0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.0067538294863144768},
    {0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.0067538294863144768},
    {0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.0067538294863144768},
    {-0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.0067538294863144768},
    {-0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.0067538294863144768},
    {0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.0067538294863144768},
    {-0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.0067538294863144768},
    {0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.0067538294863144768},
    {0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.0067538294863144768},
    {-0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.0067538294863144768},
    {0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.0067538294863144768},
    {0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.0067538294863144768},
    {-0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.0067538294863144768},
    {-0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.0067538294863144768},
    {0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.0067538294863144768},
    {-0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.0067538294863144768},
    {0.1574676672039082, 0.1574676672039082, 0.97488864367717321, 0.0075743941590540346},
    {-0.1574676672039082, 0.1574676672039082, 0.97488864367717321, 0.0075743941590540346},
    {0.1574676672039082, -0.1574676672039082, 0.97488864367717321, 0.0075743941590540346},
    {0.1574676672039082, 0.1574676672039082, -0.97488864367717321, 0.0075743941590540346},
    {-0.1574676672039082, -0.1574676672039082, 0.97488864367717321, 0.0075743941590540346},
    {-0.1574676672039082, 0.1574676672039082, -0.97488864367717321, 0.0075743941590540346},
    {0.1574676672039082, -0.1574676672039082, -0.97488864367717321, 0.0075743941590540346},
    {-0.1574676672039082, -0.1574676672039082, -0.97488864367717321, 0.0075743941590540346},
    {-0.1574676672039082, 0.97488864367717321, 0.1574676672039082, 0.0075743941590540346},
    {0.1574676672039082, -0.97488864367717321, 0.1574676672039082, 0.0075743941590540346},
    {0.1574676672039082, 0.97488864367717321, -0.1574676672039082, 0.0075743941590540346},
    {-0.1574676672039082, -0.97488864367717321, 0.1574676672039082, 0.0075743941590540346},
    {-0.1574676672039082, 0.97488864367717321, -0.1574676672039082, 0.0075743941590540346},
    {0.1574676672039082, -0.97488864367717321, -0.1574676672039082, 0.0075743941590540346},
    {-0.1574676672039082, -0.97488864367717321, -0.1574676672039082, 0.0075743941590540346},
    {0.1574676672039082, 0.97488864367717321, 0.1574676672039082, 0.0075743941590540346},
    {0.97488864367717321, 0.1574676672039082, 0.1574676672039082, 0.0075743941590540346},
    {-0.97488864367717321, 0.1574676672039082, 0.1574676672039082, 0.0075743941590540346},
    {0.97488864367717321, -0.1574676672039082, 0.1574676672039082, 0.0075743941590540346},
    {0.97488864367717321, 0.1574676672039082, -0.1574676672039082, 0.0075743941590540346},
    {-0.97488864367717321, -0.1574676672039082, 0.1574676672039082, 0.0075743941590540346},
    {-0.97488864367717321, 0.1574676672039082, -0.1574676672039082, 0.0075743941590540346},
    {0.97488864367717321, -0.1574676672039082, -0.1574676672039082, 0.0075743941590540346},
    {-0.97488864367717321, -0.1574676672039082, -0.1574676672039082, 0.0075743941590540346},
    {0.14035538117131829, 0.4493328323269557, 0.88227001126032267, 0.0069910873533032616},
    {-0.14035538117131829, 0.4493328323269557, 0.88227001126032267, 0.0069910873533032616},
    {0.14035538117131829, -0.4493328323269557, 0.88227001126032267, 0.0069910873533032616},
    {0.14035538117131829, 0.4493328323269557, -0.88227001126032267, 0.0069910873533032616},
    {-0.14035538117131829, -0.4493328323269557, 0.88227001126032267, 0.0069910873533032616},
    {0.14035538117131829, -0.4493328323269557, -0.88227001126032267, 0.0069910873533032616},
    {-0.14035538117131829, 0.4493328323269557, -0.88227001126032267, 0.0069910873533032616},
    {-0.14035538117131829, -0.4493328323269557, -0.88227001126032267, 0.0069910873533032616},
    {0.4493328323269557, 0.14035538117131829, 0.88227001126032267, 0.0069910873533032616},
    {-0.4493328323269557, 0.14035538117131829, 0.88227001126032267, 0.0069910873533032616},
    {0.4493328323269557, -0.14035538117131829, 0.88227001126032267, 0.0069910873533032616},
    {0.4493328323269557, 0.14035538117131829, -0.88227001126032267, 0.0069910873533032616},
    {-0.4493328323269557, -0.14035538117131829, 0.88227001126032267, 0.0069910873533032616},
    {0.4493328323269557, -0.14035538117131829, -0.88227001126032267, 0.0069910873533032616},
    {-0.4493328323269557, 0.14035538117131829, -0.88227001126032267, 0.0069910873533032616},
    {-0.4493328323269557, -0.14035538117131829, -0.88227001126032267, 0.0069910873533032616},
    {0.88227001126032267, 0.14035538117131829, 0.4493328323269557, 0.0069910873533032616},
    {-0.88227001126032267, 0.14035538117131829, 0.4493328323269557, 0.0069910873533032616},
    {0.88227001126032267, -0.14035538117131829, 0.4493328323269557, 0.0069910873533032616},
    {0.88227001126032267, 0.14035538117131829, -0.4493328323269557, 0.0069910873533032616},
    {-0.88227001126032267, -0.14035538117131829, 0.4493328323269557, 0.0069910873533032616},
    {0.88227001126032267, -0.14035538117131829, -0.4493328323269557, 0.0069910873533032616},
    {-0.88227001126032267, 0.14035538117131829, -0.4493328323269557, 0.0069910873533032616},
    {-0.88227001126032267, -0.14035538117131829, -0.4493328323269557, 0.0069910873533032616},
    {0.88227001126032267, 0.4493328323269557, 0.14035538117131829, 0.0069910873533032616},
    {-0.88227001126032267, 0.4493328323269557, 0.14035538117131829, 0.0069910873533032616},
    {0.88227001126032267, -0.4493328323269557, 0.14035538117131829, 0.0069910873533032616},
    {0.88227001126032267, 0.4493328323269557, -0.14035538117131829, 0.0069910873533032616},
    {-0.88227001126032267, -0.4493328323269557, 0.14035538117131829, 0.0069910873533032616},
    {0.88227001126032267, -0.4493328323269557, -0.14035538117131829, 0.0069910873533032616},
    {-0.88227001126032267, 0.4493328323269557, -0.14035538117131829, 0.0069910873533032616},
    {-0.88227001126032267, -0.4493328323269557, -0.14035538117131829, 0.0069910873533032616},
    {0.14035538117131829, 0.88227001126032267, 0.4493328323269557, 0.0069910873533032616},
    {-0.14035538117131829, 0.88227001126032267, 0.4493328323269557, 0.0069910873533032616},
    {0.14035538117131829, -0.88227001126032267, 0.4493328323269557, 0.0069910873533032616},
    {0.14035538117131829, 0.88227001126032267, -0.4493328323269557, 0.0069910873533032616},
    {-0.14035538117131829, -0.88227001126032267, 0.4493328323269557, 0.0069910873533032616},
    {0.14035538117131829, -0.88227001126032267, -0.4493328323269557, 0.0069910873533032616},
    {-0.14035538117131829, 0.88227001126032267, -0.4493328323269557, 0.0069910873533032616},
    {-0.14035538117131829, -0.88227001126032267, -0.4493328323269557, 0.0069910873533032616},
    {0.4493328323269557, 0.88227001126032267, 0.14035538117131829, 0.0069910873533032616},
    {-0.4493328323269557, 0.88227001126032267, 0.14035538117131829, 0.0069910873533032616},
    {0.4493328323269557, -0.88227001126032267, 0.14035538117131829, 0.0069910873533032616},
    {0.4493328323269557, 0.88227001126032267, -0.14035538117131829, 0.0069910873533032616},
    {-0.4493328323269557, -0.88227001126032267, 0.14035538117131829, 0.0069910873533032616},
    {0.4493328323269557, -0.88227001126032267, -0.14035538117131829, 0.0069910873533032616},
    {-0.4493328323269557, 0.88227001126032267, -0.14035538117131829, 0.0069910873533032616},
    {-0.4493328323269557, -0.88227001126032267, -0.14035538117131829, 0.0069910873533032616},
};

constexpr LebedevNode kLebedev23[] = {
    {1, 0, 0, 0.001782340447244611},
    {-1, 0, 0, 0.001782340447244611},
    {0, 1, 0, 0.001782340447244611},
    {0, -1, 0, 0.001782340447244611},
    {0, 0, 1, 0.001782340447244611},
    {0, 0, -1, 0.001782340447244611},
    {0, 0.70710678118654757, 0.70710678118654757, 0.0057169059499771017},
    {0, -0.70710678118654757, 0.70710678118654757, 0.0057169059499771017},
    {0, 0.70710678118654757, -0.70710678118654757, 0.0057169059499771017},
    {0, -0.70710678118654757, -0.70710678118654757, 0.0057169059499771017},
    {0.70710678118654757, 0, 0.70710678118654757, 0.0057169059499771017},
    {0.70710678118654757, 0, -0.70710678118654757, 0.0057169059499771017},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.0057169059499771017},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.0057169059499771017},
    {0.70710678118654757, 0.70710678118654757, 0, 0.0057169059499771017},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.0057169059499771017},
    {0.70710678118654757, -0.70710678118654757, 0, 0.0057169059499771017},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.0057169059499771017},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0055733831788487374},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0055733831788487374},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0055733831788487374},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0055733831788487374},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0055733831788487374},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0055733831788487374},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0055733831788487374},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0055733831788487374},
    {0.67129734426952259, 0.67129734426952259, 0.31419699418258629, 0.0056087040825879972},
    {-0.67129734426952259, 0.67129734426952259, 0.31419699418258629, 0.0056087040825879972},
    {0.67129734426952259, -0.67129734426952259, 0.31419699418258629, 0.0056087040825879972},
    {0.67129734426952259, 0.67129734426952259, -0.31419699418258629, 0.0056087040825879972},
    {-0.67129734426952259, -0.67129734426952259, 0.31419699418258629, 0.0056087040825879972},
    {-0.67129734426952259, 0.67129734426952259, -0.31419699418258629, 0.0056087040825879972},
    {0.67129734426952259, -0.67129734426952259, -0.31419699418258629, 0.0056087040825879972},
    {-0.67129734426952259, -0.67129734426952259, -0.31419699418258629, 0.0056087040825879972},
    {-0.67129734426952259, 0.31419699418258629, 0.67129734426952259, 0.0056087040825879972},
    {0.67129734426952259, -0.31419699418258629, 0.67129734426952259, 0.0056087040825879972},
    {0.67129734426952259, 0.31419699418258629, -0.67129734426952259, 0.0056087040825879972},
    {-0.67129734426952259, -0.31419699418258629, 0.67129734426952259, 0.0056087040825879972},
    {-0.67129734426952259, 0.31419699418258629, -0.67129734426952259, 0.0056087040825879972},
    {0.67129734426952259, -0.31419699418258629, -0.67129734426952259, 0.0056087040825879972},
    {-0.67129734426952259, -0.31419699418258629, -0.67129734426952259, 0.0056087040825879972},
    {0.67129734426952259, 0.31419699418258629, 0.67129734426952259, 0.0056087040825879972},
    {0.31419699418258629, 0.67129734426952259, 0.67129734426952259, 0.0056087040825879972},
    {-0.31419699418258629, 0.67129734426952259, 0.67129734426952259, 0.0056087040825879972},
    {0.31419699418258629, -0.67129734426952259, 0.67129734426952259, 0.0056087040825879972},
    {0.31419699418258629, 0.67129734426952259, -0.67129734426952259, 0.0056087040825879972},
    {-0.31419699418258629, -0.67129734426952259, 0.67129734426952259, 0.0056087040825879972},
    {-0.31419699418258629, 0.67129734426952259, -0.67129734426952259, 0.0056087040825879972},
    {0.31419699418258629, -0.67129734426952259, -0.67129734426952259, 0.0056087040825879972},
    {-0.31419699418258629, -0.67129734426952259, -0.67129734426952259, 0.0056087040825879972},
    {0.2892465627575439, 0.2892465627575439, 0.91250909686747372, 0.0051582377118053833},
    {-0.2892465627575439, 0.2892465627575439, 0.91250909686747372, 0.0051582377118053833},
    {0.2892465627575439, -0.2892465627575439, 0.91250909686747372, 0.0051582377118053833},
    {0.2892465627575439, 0.2892465627575439, -0.91250909686747372, 0.0051582377118053833},
    {-0.2892465627575439, -0.2892465627575439, 0.91250909686747372, 0.0051582377118053833},
    {-0.2892465627575439, 0.2892465627575439, -0.91250909686747372, 0.0051582377118053833},
    {0.2892465627575439, -0.2892465627575439, -0.91250909686747372, 0.0051582377118053833},
    {-0.2892465627575439, -0.2892465627575439, -0.91250909686747372, 0.0051582377118053833},
    {-0.2892465627575439, 0.91250909686747372, 0.2892465627575439, 0.0051582377118053833},
    {0.2892465627575439, -0.91250909686747372, 0.2892465627575439, 0.0051582377118053833},
    {0.2892465627575439, 0.91250909686747372, -0.2892465627575439, 0.0051582377118053833},
    {-0.2892465627575439, -0.91250909686747372, 0.2892465627575439, 0.0051582377118053833},
    {-0.2892465627575439, 0.91250909686747372, -0.2892465627575439, 0.0051582377118053833},
    {0.2892465627575439, -0.91250909686747372, -0.2892465627575439, 0.0051582377118053833},
    {-0.2892465627575439, -0.91250909686747372, -0.2892465627575439, 0.0051582377118053833},
    {0.2892465627575439, 0.91250909686747372, 0.2892465627575439, 0.0051582377118053833},
    {0.91250909686747372, 0.2892465627575439, 0.2892465627575439, 0.0051582377118053833},
    {-0.91250909686747372, 0.2892465627575439, 0.2892465627575439, 0.0051582377118053833},
    {0.91250909686747372, -0.2892465627575439, 0.2892465627575439, 0.0051582377118053833},
    {0.91250909686747372, 0.2892465627575439, -0.2892465627575439, 0.0051582377118053833},
    {-0.91250909686747372, -0.2892465627575439, 0.2892465627575439, 0.0051582377118053833},
    {-0.91250909686747372, 0.2892465627575439, -0.2892465627575439, 0.0051582377118053833},
    {0.91250909686747372, -0.2892465627575439, -0.2892465627575439, 0.0051582377118053833},
    {-0.91250909686747372, -0.2892465627575439, -0.2892465627575439, 0.0051582377118053833},
    {0.44469331787174371, 0.44469331787174371, 0.77749321931476711, 0.0055187714672736143},
    {-0.44469331787174371, 0.44469331787174371, 0.77749321931476711, 0.0055187714672736143},
    {0.44469331787174371, -0.44469331787174371, 0.77749321931476711, 0.0055187714672736143},
    {0.44469331787174371, 0.44469331787174371, -0.77749321931476711, 0.0055187714672736143},
    {-0.44469331787174371, -0.44469331787174371, 0.77749321931476711, 0.0055187714672736143},
    {-0.44469331787174371, 0.44469331787174371, -0.77749321931476711, 0.0055187714672736143},
    {0.44469331787174371, -0.44469331787174371, -0.77749321931476711, 0.0055187714672736143},
    {-0.44469331787174371, -0.44469331787174371, -0.77749321931476711, 0.0055187714672736143},
    {-0.44469331787174371, 0.77749321931476711, 0.44469331787174371, 0.0055187714672736143},
    {0.44469331787174371, -0.77749321931476711, 0.44469331787174371, 0.0055187714672736143},
    {0.44469331787174371, 0.77749321931476711, -0.44469331787174371, 0.0055187714672736143},
    {-0.44469331787174371, -0.77749321931476711, 0.44469331787174371, 0.0055187714672736143},
    {-0.44469331787174371, 0.77749321931476711, -0.44469331787174371, 0.0055187714672736143},
    {0.44469331787174371, -0.77749321931476711, -0.44469331787174371, 0.0055187714672736143},
    {-0.44469331787174371, -0.77749321931476711, -0.44469331787174371, 0.0055187714672736143},
    {0.44469331787174371, 0.77749321931476711, 0.44469331787174371, 0.0055187714672736143},
    {0.77749321931476711, 0.44469331787174371, 0.44469331787174371, 0.0055187714672736143},
    {-0.77749321931476711, 0.44469331787174371, 0.44469331787174371, 0.0055187714672736143},
    {0.77749321931476711, -0.44469331787174371, 0.44469331787174371, 0.0055187714672736143},
    {0.77749321931476711, 0.44469331787174371, -0.44469331787174371, 0.0055187714672736143},
    {-0.77749321931476711, -0.44469331787174371, 0.44469331787174371, 0.0055187714672736143},
    {-0.77749321931476711, 0.44469331787174371, -0.44469331787174371, 0.0055187714672736143},
    {0.77749321931476711, -0.44469331787174371, -0.44469331787174371, 0.0055187714672736143},
    {-0.77749321931476711, -0.44469331787174371, -0.44469331787174371, 0.0055187714672736143},
    {0.12993354476500671, 0.12993354476500671, 0.98297230270725322, 0.0041067770281693937},
    {-0.12993354476500671, 0.12993354476500671, 0.98297230270725322, 0.0041067770281693937},
    {0.12993354476500671, -0.12993354476500671, 0.98297230270725322, 0.0041067770281693937},
    {0.12993354476500671, 0.12993354476500671, -0.98297230270725322, 0.0041067770281693937},
    {-0.12993354476500671, -0.12993354476500671, 0.98297230270725322, 0.0041067770281693937},
    {-0.12993354476500671, 0.12993354476500671, -0.98297230270725322, 0.0041067770281693937},
    {0.12993354476500671, -0.12993354476500671, -0.98297230270725322, 0.0041067770281693937},
    {-0.12993354476500671, -0.12993354476500671, -0.98297230270725322, 0.0041067770281693937},
    {-0.12993354476500671, 0.98297230270725322, 0.12993354476500671, 0.0041067770281693937},
    {0.12993354476500671, -0.98297230270725322, 0.12993354476500671, 0.0041067770281693937},
    {0.12993354476500671, 0.98297230270725322, -0.12993354476500671, 0.0041067770281693937},
    {-0.12993354476500671, -0.98297230270725322, 0.12993354476500671, 0.0041067770281693937},
    {-0.12993354476500671, 0.98297230270725322, -0.12993354476500671, 0.0041067770281693937},
    {0.12993354476500671, -0.98297230270725322, -0.12993354476500671, 0.0041067770281693937},
    {-0.12993354476500671, -0.98297230270725322, -0.12993354476500671, 0.0041067770281693937},
    {0.12993354476500671, 0.98297230270725322, 0.12993354476500671, 0.0041067770281693937},
    {0.98297230270725322, 0.12993354476500671, 0.12993354476500671, 0.0041067770281693937},
    {-0.98297230270725322, 0.12993354476500671, 0.12993354476500671, 0.0041067770281693937},
    {0.98297230270725322, -0.12993354476500671, 0.12993354476500671, 0.0041067770281693937},
    {0.98297230270725322, 0.12993354476500671, -0.12993354476500671, 0.0041067770281693937},
    {-0.98297230270725322, -0.12993354476500671, 0.12993354476500671, 0.0041067770281693937},
    {-0.98297230270725322, 0.12993354476500671, -0.12993354476500671, 0.0041067770281693937},
    {0.98297230270725322, -0.12993354476500671, -0.12993354476500671, 0.0041067770281693937},
    {-0.98297230270725322, -0.12993354476500671, -0.12993354476500671, 0.0041067770281693937},
    {0.34577021976112832, 0.93831921813759156, 0, 0.0050518460646148079},
    {-0.34577021976112832, 0.93831921813759156, 0, 0.0050518460646148079},
    {0.34577021976112832, -0.93831921813759156, 0, 0.0050518460646148079},
    {-0.34577021976112832, -0.93831921813759156, 0, 0.0050518460646148079},
    {0.93831921813759156, 0.34577021976112832, 0, 0.0050518460646148079},
    {-0.93831921813759156, 0.34577021976112832, 0, 0.0050518460646148079},
    {0.93831921813759156, -0.34577021976112832, 0, 0.0050518460646148079},
    {-0.93831921813759156, -0.34577021976112832, 0, 0.0050518460646148079},
    {0.34577021976112832, 0, 0.93831921813759156, 0.0050518460646148079},
    {-0.34577021976112832, 0, 0.93831921813759156, 0.0050518460646148079},
    {0.34577021976112832, 0, -0.93831921813759156, 0.0050518460646148079},
    {-0.34577021976112832, 0, -0.93831921813759156, 0.0050518460646148079},
    {0.93831921813759156, 0, 0.34577021976112832, 0.0050518460646148079},
    {-0.93831921813759156, 0, 0.34577021976112832, 0.0050518460646148079},
    {0.93831921813759156, 0, -0.34577021976112832, 0.0050518460646148079},
    {-0.93831921813759156, 0, -0.34577021976112832, 0.0050518460646148079},
    {0, 0.34577021976112832, 0.93831921813759156, 0.0050518460646148079},
    {0, -0.34577021976112832, 0.93831921813759156, 0.0050518460646148079},
    {0, 0.34577021976112832, -0.93831921813759156, 0.0050518460646148079},
    {0, -0.34577021976112832, -0.93831921813759156, 0.0050518460646148079},
    {0, 0.93831921813759156, 0.34577021976112832, 0.0050518460646148079},
    {0, -0.93831921813759156, 0.34577021976112832, 0.0050518460646148079},
    {0, 0.93831921813759156, -0.34577021976112832, 0.0050518460646148079},
    {0, -0.93831921813759156, -0.34577021976112832, 0.0050518460646148079},
    {0.159041710538353, 0.83603601548245887, 0.52511857244364202, 0.0055302489162330944},
    {-0.159041710538353, 0.83603601548245887, 0.52511857244364202, 0.0055302489162330944},
    {0.159041710538353, -0.83603601548245887, 0.52511857244364202, 0.0055302489162330944},
    {0.159041710538353, 0.83603601548245887, -0.52511857244364202, 0.0055302489162330944},
    {-0.159041710538353, -0.83603601548245887, 0.52511857244364202, 0.0055302489162330944},
    {0.159041710538353, -0.83603601548245887, -0.52511857244364202, 0.0055302489162330944},
    {-0.159041710538353, 0.83603601548245887, -0.52511857244364202, 0.0055302489162330944},
    {-0.159041710538353, -0.83603601548245887, -0.52511857244364202, 0.0055302489162330944},
    {0.83603601548245887, 0.159041710538353, 0.52511857244364202, 0.0055302489162330944},
    {-0.83603601548245887, 0.159041710538353, 0.52511857244364202, 0.0055302489162330944},
    {0.83603601548245887, -0.159041710538353, 0.52511857244364202, 0.0055302489162330944},
    {0.83603601548245887, 0.159041710538353, -0.52511857244364202, 0.0055302489162330944},
    {-0.83603601548245887, -0.159041710538353, 0.52511857244364202, 0.0055302489162330944},
    {0.83603601548245887, -0.159041710538353, -0.52511857244364202, 0.0055302489162330944},
    {-0.83603601548245887, 0.159041710538353, -0.52511857244364202, 0.0055302489162330944},
    {-0.83603601548245887, -0.159041710538353, -0.52511857244364202, 0.0055302489162330944},
    {0.52511857244364202, 0.159041710538353, 0.83603601548245887, 0.0055302489162330944},
    {-0.52511857244364202, 0.159041710538353, 0.83603601548245887, 0.0055302489162330944},
    {0.52511857244364202, -0.159041710538353, 0.83603601548245887, 0.0055302489162330944},
    {0.52511857244364202, 0.159041710538353, -0.83603601548245887, 0.0055302489162330944},
    {-0.52511857244364202, -0.159041710538353, 0.83603601548245887, 0.0055302489162330944},
    {0.52511857244364202, -0.159041710538353, -0.83603601548245887, 0.0055302489162330944},
    {-0.52511857244364202, 0.159041710538353, -0.83603601548245887, 0.0055302489162330944},
    {-0.52511857244364202, -0.159041710538353, -0.83603601548245887, 0.0055302489162330944},
    {0.52511857244364202, 0.83603601548245887, 0.159041710538353, 0.0055302489162330944},
    {-0.52511857244364202, 0.83603601548245887, 0.159041710538353, 0.0055302489162330944},
    {0.52511857244364202, -0.83603601548245887, 0.159041710538353, 0.0055302489162330944},
    {0.52511857244364202, 0.83603601548245887, -0.159041710538353, 0.0055302489162330944},
    {-0.52511857244364202, -0.83603601548245887, 0.159041710538353, 0.0055302489162330944},
    {0.52511857244364202, -0.83603601548245887, -0.159041710538353, 0.0055302489162330944},
    {-0.52511857244364202, 0.83603601548245887, -0.159041710538353, 0.0055302489162330944},
    {-0.52511857244364202, -0.83603601548245887, -0.159041710538353, 0.0055302489162330944},
    {0.159041710538353, 0.52511857244364202, 0.83603601548245887, 0.0055302489162330944},
    {-0.159041710538353, 0.52511857244364202, 0.83603601548245887, 0.0055302489162330944},
    {0.159041710538353, -0.52511857244364202, 0.83603601548245887, 0.0055302489162330944},
    {0.159041710538353, 0.52511857244364202, -0.83603601548245887, 0.0055302489162330944},
    {-0.159041710538353, -0.52511857244364202, 0.83603601548245887, 0.0055302489162330944},
    {0.159041710538353, -0.52511857244364202, -0.83603601548245887, 0.0055302489162330944},
    {-0.159041710538353, 0.52511857244364202, -0.83603601548245887, 0.0055302489162330944},
    {-0.159041710538353, -0.52511857244364202, -0.83603601548245887, 0.0055302489162330944},
    {0.83603601548245887, 0.52511857244364202, 0.159041710538353, 0.0055302489162330944},
    {-0.83603601548245887, 0.52511857244364202, 0.159041710538353, 0.0055302489162330944},
    {0.83603601548245887, -0.52511857244364202, 0.159041710538353, 0.0055302489162330944},
    {0.83603601548245887, 0.52511857244364202, -0.159041710538353, 0.0055302489162330944},
    {-0.83603601548245887, -0.52511857244364202, 0.159041710538353, 0.0055302489162330944},
    {0.83603601548245887, -0.52511857244364202, -0.159041710538353, 0.0055302489162330944},
    {-0.83603601548245887, 0.52511857244364202, -0.159041710538353, 0.0055302489162330944},
    {-0.83603601548245887, -0.52511857244364202, -0.159041710538353, 0.0055302489162330944},
};

constexpr LebedevNode kLebedev29[] = {
    {1, 0, 0, 0.00085459117251281483},
    {-1, 0, 0, 0.00085459117251281483},
    {0, 1, 0, 0.00085459117251281483},
    {0, -1, 0, 0.00085459117251281483},
    {0, 0, 1, 0.00085459117251281483},
    {0, 0, -1, 0.00085459117251281483},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0035991192850255709},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0035991192850255709},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0035991192850255709},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0035991192850255709},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0035991192850255709},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0035991192850255709},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0035991192850255709},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0035991192850255709},
    {0.35156403455701052, 0.35156403455701052, 0.86764362454408339, 0.003449788424305883},
    {-0.35156403455701052, 0.35156403455701052, 0.86764362454408339, 0.003449788424305883},
    {0.35156403455701052, -0.35156403455701052, 0.86764362454408339, 0.003449788424305883},
    {0.35156403455701052, 0.35156403455701052, -0.86764362454408339, 0.003449788424305883},
    {-0.35156403455701052, -0.35156403455701052, 0.86764362454408339, 0.003449788424305883},
    {-0.35156403455701052, 0.35156403455701052, -0.86764362454408339, 0.003449788424305883},
    {0.35156403455701052, -0.35156403455701052, -0.86764362454408339, 0.003449788424305883},
    {-0.35156403455701052, -0.35156403455701052, -0.86764362454408339, 0.003449788424305883},
    {-0.35156403455701052, 0.86764362454408339, 0.35156403455701052, 0.003449788424305883},
    {0.35156403455701052, -0.86764362454408339, 0.35156403455701052, 0.003449788424305883},
    {0.35156403455701052, 0.86764362454408339, -0.35156403455701052, 0.003449788424305883},
    {-0.35156403455701052, -0.86764362454408339, 0.35156403455701052, 0.003449788424305883},
    {-0.35156403455701052, 0.86764362454408339, -0.35156403455701052, 0.003449788424305883},
    {0.35156403455701052, -0.86764362454408339, -0.35156403455701052, 0.003449788424305883},
    {-0.35156403455701052, -0.86764362454408339, -0.35156403455701052, 0.003449788424305883},
    {0.35156403455701052, 0.86764362454408339, 0.35156403455701052, 0.003449788424305883},
    {0.86764362454408339, 0.35156403455701052, 0.35156403455701052, 0.003449788424305883},
    {-0.86764362454408339, 0.35156403455701052, 0.35156403455701052, 0.003449788424305883},
    {0.86764362454408339, -0.35156403455701052, 0.35156403455701052, 0.003449788424305883},
    {0.86764362454408339, 0.35156403455701052, -0.35156403455701052, 0.003449788424305883},
    {-0.86764362454408339, -0.35156403455701052, 0.35156403455701052, 0.003449788424305883},
    {-0.86764362454408339, 0.35156403455701052, -0.35156403455701052, 0.003449788424305883},
    {0.86764362454408339, -0.35156403455701052, -0.35156403455701052, 0.003449788424305883},
    {-0.86764362454408339, -0.35156403455701052, -0.35156403455701052, 0.003449788424305883},
    {0.65663294102196124, 0.65663294102196124, 0.37103417838482095, 0.0036048226014198819},
    {-0.65663294102196124, 0.65663294102196124, 0.37103417838482095, 0.0036048226014198819},
    {0.65663294102196124, -0.65663294102196124, 0.37103417838482095, 0.0036048226014198819},
    {0.65663294102196124, 0.65663294102196124, -0.37103417838482095, 0.0036048226014198819},
    {-0.65663294102196124, -0.65663294102196124, 0.37103417838482095, 0.0036048226014198819},
    {-0.65663294102196124, 0.65663294102196124, -0.37103417838482095, 0.0036048226014198819},
    {0.65663294102196124, -0.65663294102196124, -0.37103417838482095, 0.0036048226014198819},
    {-0.65663294102196124, -0.65663294102196124, -0.37103417838482095, 0.0036048226014198819},
    {-0.65663294102196124, 0.37103417838482095, 0.65663294102196124, 0.0036048226014198819},
    {0.65663294102196124, -0.37103417838482095, 0.65663294102196124, 0.0036048226014198819},
    {0.65663294102196124, 0.37103417838482095, -0.65663294102196124, 0.0036048226014198819},
    {-0.65663294102196124, -0.37103417838482095, 0.65663294102196124, 0.0036048226014198819},
    {-0.65663294102196124, 0.37103417838482095, -0.65663294102196124, 0.0036048226014198819},
    {0.65663294102196124, -0.37103417838482095, -0.65663294102196124, 0.0036048226014198819},
    {-0.65663294102196124, -0.37103417838482095, -0.65663294102196124, 0.0036048226014198819},
    {0.65663294102196124, 0.37103417838482095, 0.65663294102196124, 0.0036048226014198819},
    {0.37103417838482095, 0.65663294102196124, 0.65663294102196124, 0.0036048226014198819},
    {-0.37103417838482095, 0.65663294102196124, 0.65663294102196124, 0.0036048226014198819},
    {0.37103417838482095, -0.65663294102196124, 0.65663294102196124, 0.0036048226014198819},
    {0.37103417838482095, 0.65663294102196124, -0.65663294102196124, 0.0036048226014198819},
    {-0.37103417838482095, -0.65663294102196124, 0.65663294102196124, 0.0036048226014198819},
    {-0.37103417838482095, 0.65663294102196124, -0.65663294102196124, 0.0036048226014198819},
    {0.37103417838482095, -0.65663294102196124, -0.65663294102196124, 0.0036048226014198819},
    {-0.37103417838482095, -0.65663294102196124, -0.65663294102196124, 0.0036048226014198819},
    {0.47290541325810048, 0.47290541325810048, 0.74345204298755574, 0.003576729661743367},
    {-0.47290541325810048, 0.47290541325810048, 0.74345204298755574, 0.003576729661743367},
    {0.47290541325810048, -0.47290541325810048, 0.74345204298755574, 0.003576729661743367},
    {0.47290541325810048, 0.47290541325810048, -0.74345204298755574, 0.003576729661743367},
    {-0.47290541325810048, -0.47290541325810048, 0.74345204298755574, 0.003576729661743367},
    {-0.47290541325810048, 0.47290541325810048, -0.74345204298755574, 0.003576729661743367},
    {0.47290541325810048, -0.47290541325810048, -0.74345204298755574, 0.003576729661743367},
    {-0.47290541325810048, -0.47290541325810048, -0.74345204298755574, 0.003576729661743367},
    {-0.47290541325810048, 0.74345204298755574, 0.47290541325810048, 0.003576729661743367},
    {0.47290541325810048, -0.74345204298755574, 0.47290541325810048, 0.003576729661743367},
    {0.47290541325810048, 0.74345204298755574, -0.47290541325810048, 0.003576729661743367},
    {-0.47290541325810048, -0.74345204298755574, 0.47290541325810048, 0.003576729661743367},
    {-0.47290541325810048, 0.74345204298755574, -0.47290541325810048, 0.003576729661743367},
    {0.47290541325810048, -0.74345204298755574, -0.47290541325810048, 0.003576729661743367},
    {-0.47290541325810048, -0.74345204298755574, -0.47290541325810048, 0.003576729661743367},
    {0.47290541325810048, 0.74345204298755574, 0.47290541325810048, 0.003576729661743367},
    {0.74345204298755574, 0.47290541325810048, 0.47290541325810048, 0.003576729661743367},
    {-0.74345204298755574, 0.47290541325810048, 0.47290541325810048, 0.003576729661743367},
    {0.74345204298755574, -0.47290541325810048, 0.47290541325810048, 0.003576729661743367},
    {0.74345204298755574, 0.47290541325810048, -0.47290541325810048, 0.003576729661743367},
    {-0.74345204298755574, -0.47290541325810048, 0.47290541325810048, 0.003576729661743367},
    {-0.74345204298755574, 0.47290541325810048, -0.47290541325810048, 0.003576729661743367},
    {0.74345204298755574, -0.47290541325810048, -0.47290541325810048, 0.003576729661743367},
    {-0.74345204298755574, -0.47290541325810048, -0.47290541325810048, 0.003576729661743367},
    {0.096183085226147838, 0.096183085226147838, 0.9907056213794081, 0.0023521014136891642},
    {-0.096183085226147838, 0.096183085226147838, 0.9907056213794081, 0.0023521014136891642},
    {0.096183085226147838, -0.096183085226147838, 0.9907056213794081, 0.0023521014136891642},
    {0.096183085226147838, 0.096183085226147838, -0.9907056213794081, 0.0023521014136891642},
    {-0.096183085226147838, -0.096183085226147838, 0.9907056213794081, 0.0023521014136891642},
    {-0.096183085226147838, 0.096183085226147838, -0.9907056213794081, 0.0023521014136891642},
    {0.096183085226147838, -0.096183085226147838, -0.9907056213794081, 0.0023521014136891642},
    {-0.096183085226147838, -0.096183085226147838, -0.9907056213794081, 0.0023521014136891642},
    {-0.096183085226147838, 0.9907056213794081, 0.096183085226147838, 0.0023521014136891642},
    {0.096183085226147838, -0.9907056213794081, 0.096183085226147838, 0.0023521014136891642},
    {0.096183085226147838, 0.9907056213794081, -0.096183085226147838, 0.0023521014136891642},
    {-0.096183085226147838, -0.9907056213794081, 0.096183085226147838, 0.0023521014136891642},
    {-0.096183085226147838, 0.9907056213794081, -0.096183085226147838, 0.0023521014136891642},
    {0.096183085226147838, -0.9907056213794081, -0.096183085226147838, 0.0023521014136891642},
    {-0.096183085226147838, -0.9907056213794081, -0.096183085226147838, 0.0023521014136891642},
    {0.096183085226147838, 0.9907056213794081, 0.096183085226147838, 0.0023521014136891642},
    {0.9907056213794081, 0.096183085226147838, 0.096183085226147838, 0.0023521014136891642},
    {-0.9907056213794081, 0.096183085226147838, 0.096183085226147838, 0.0023521014136891642},
    {0.9907056213794081, -0.096183085226147838, 0.096183085226147838, 0.0023521014136891642},
    {0.9907056213794081, 0.096183085226147838, -0.096183085226147838, 0.0023521014136891642},
    {-0.9907056213794081, -0.096183085226147838, 0.096183085226147838, 0.0023521014136891642},
    {-0.9907056213794081, 0.096183085226147838, -0.096183085226147838, 0.0023521014136891642},
    {0.9907056213794081, -0.096183085226147838, -0.096183085226147838, 0.0023521014136891642},
    {-0.9907056213794081, -0.096183085226147838, -0.096183085226147838, 0.0023521014136891642},
    {0.22196452362941779, 0.22196452362941779, 0.94945431722644313, 0.0031089531224136749},
    {-0.22196452362941779, 0.22196452362941779, 0.94945431722644313, 0.0031089531224136749},
    {0.22196452362941779, -0.22196452362941779, 0.94945431722644313, 0.0031089531224136749},
    {0.22196452362941779, 0.22196452362941779, -0.94945431722644313, 0.0031089531224136749},
    {-0.22196452362941779, -0.22196452362941779, 0.94945431722644313, 0.0031089531224136749},
    {-0.22196452362941779, 0.22196452362941779, -0.94945431722644313, 0.0031089531224136749},
    {0.22196452362941779, -0.22196452362941779, -0.94945431722644313, 0.0031089531224136749},
    {-0.22196452362941779, -0.22196452362941779, -0.94945431722644313, 0.0031089531224136749},
    {-0.22196452362941779, 0.94945431722644313, 0.22196452362941779, 0.0031089531224136749},
    {0.22196452362941779, -0.94945431722644313, 0.22196452362941779, 0.0031089531224136749},
    {0.22196452362941779, 0.94945431722644313, -0.22196452362941779, 0.0031089531224136749},
    {-0.22196452362941779, -0.94945431722644313, 0.22196452362941779, 0.0031089531224136749},
    {-0.22196452362941779, 0.94945431722644313, -0.22196452362941779, 0.0031089531224136749},
    {0.22196452362941779, -0.94945431722644313, -0.22196452362941779, 0.0031089531224136749},
    {-0.22196452362941779, -0.94945431722644313, -0.22196452362941779, 0.0031089531224136749},
    {0.22196452362941779, 0.94945431722644313, 0.22196452362941779, 0.0031089531224136749},
    {0.94945431722644313, 0.22196452362941779, 0.22196452362941779, 0.0031089531224136749},
    {-0.94945431722644313, 0.22196452362941779, 0.22196452362941779, 0.0031089531224136749},
    {0.94945431722644313, -0.22196452362941779, 0.22196452362941779, 0.0031089531224136749},
    {0.94945431722644313, 0.22196452362941779, -0.22196452362941779, 0.0031089531224136749},
    {-0.94945431722644313, -0.22196452362941779, 0.22196452362941779, 0.0031089531224136749},
    {-0.94945431722644313, 0.22196452362941779, -0.22196452362941779, 0.0031089531224136749},
    {0.94945431722644313, -0.22196452362941779, -0.22196452362941779, 0.0031089531224136749},
    {-0.94945431722644313, -0.22196452362941779, -0.22196452362941779, 0.0031089531224136749},
    {0.70117664160895454, 0.70117664160895454, 0.12923867271051442, 0.0036500458076772551},
    {-0.70117664160895454, 0.70117664160895454, 0.12923867271051442, 0.0036500458076772551},
    {0.70117664160895454, -0.70117664160895454, 0.12923867271051442, 0.0036500458076772551},
    {0.70117664160895454, 0.70117664160895454, -0.12923867271051442, 0.0036500458076772551},
    {-0.70117664160895454, -0.70117664160895454, 0.12923867271051442, 0.0036500458076772551},
    {-0.70117664160895454, 0.70117664160895454, -0.12923867271051442, 0.0036500458076772551},
    {0.70117664160895454, -0.70117664160895454, -0.12923867271051442, 0.0036500458076772551},
    {-0.70117664160895454, -0.70117664160895454, -0.12923867271051442, 0.0036500458076772551},
    {-0.70117664160895454, 0.12923867271051442, 0.70117664160895454, 0.0036500458076772551},
    {0.70117664160895454, -0.12923867271051442, 0.70117664160895454, 0.0036500458076772551},
    {0.70117664160895454, 0.12923867271051442, -0.70117664160895454, 0.0036500458076772551},
    {-0.70117664160895454, -0.12923867271051442, 0.70117664160895454, 0.0036500458076772551},
    {-0.70117664160895454, 0.12923867271051442, -0.70117664160895454, 0.0036500458076772551},
    {0.70117664160895454, -0.12923867271051442, -0.70117664160895454, 0.0036500458076772551},
    {-0.70117664160895454, -0.12923867271051442, -0.70117664160895454, 0.0036500458076772551},
    {0.70117664160895454, 0.12923867271051442, 0.70117664160895454, 0.0036500458076772551},
    {0.12923867271051442, 0.70117664160895454, 0.70117664160895454, 0.0036500458076772551},
    {-0.12923867271051442, 0.70117664160895454, 0.70117664160895454, 0.0036500458076772551},
    {0.12923867271051442, -0.70117664160895454, 0.70117664160895454, 0.0036500458076772551},
    {0.12923867271051442, 0.70117664160895454, -0.70117664160895454, 0.0036500458076772551},
    {-0.12923867271051442, -0.70117664160895454, 0.70117664160895454, 0.0036500458076772551},
    {-0.12923867271051442, 0.70117664160895454, -0.70117664160895454, 0.0036500458076772551},
    {0.12923867271051442, -0.70117664160895454, -0.70117664160895454, 0.0036500458076772551},
    {-0.12923867271051442, -0.70117664160895454, -0.70117664160895454, 0.0036500458076772551},
    {0.26441528870606629, 0.96440891487920599, 0, 0.0029823449631718041},
    {-0.26441528870606629, 0.96440891487920599, 0, 0.0029823449631718041},
    {0.26441528870606629, -0.96440891487920599, 0, 0.0029823449631718041},
    {-0.26441528870606629, -0.96440891487920599, 0, 0.0029823449631718041},
    {0.96440891487920599, 0.26441528870606629, 0, 0.0029823449631718041},
    {-0.96440891487920599, 0.26441528870606629, 0, 0.0029823449631718041},
    {0.96440891487920599, -0.26441528870606629, 0, 0.0029823449631718041},
    {-0.96440891487920599, -0.26441528870606629, 0, 0.0029823449631718041},
    {0.26441528870606629, 0, 0.96440891487920599, 0.0029823449631718041},
    {-0.26441528870606629, 0, 0.96440891487920599, 0.0029823449631718041},
    {0.26441528870606629, 0, -0.96440891487920599, 0.0029823449631718041},
    {-0.26441528870606629, 0, -0.96440891487920599, 0.0029823449631718041},
    {0.96440891487920599, 0, 0.26441528870606629, 0.0029823449631718041},
    {-0.96440891487920599, 0, 0.26441528870606629, 0.0029823449631718041},
    {0.96440891487920599, 0, -0.26441528870606629, 0.0029823449631718041},
    {-0.96440891487920599, 0, -0.26441528870606629, 0.0029823449631718041},
    {0, 0.26441528870606629, 0.96440891487920599, 0.0029823449631718041},
    {0, -0.26441528870606629, 0.96440891487920599, 0.0029823449631718041},
    {0, 0.26441528870606629, -0.96440891487920599, 0.0029823449631718041},
    {0, -0.26441528870606629, -0.96440891487920599, 0.0029823449631718041},
    {0, 0.96440891487920599, 0.26441528870606629, 0.0029823449631718041},
    {0, -0.96440891487920599, 0.26441528870606629, 0.0029823449631718041},
    {0, 0.96440891487920599, -0.26441528870606629, 0.0029823449631718041},
    {0, -0.96440891487920599, -0.26441528870606629, 0.0029823449631718041},
    {0.57189558918789607, 0.82032641982775933, 0, 0.0036008209322164601},
    {-0.57189558918789607, 0.82032641982775933, 0, 0.0036008209322164601},
    {0.57189558918789607, -0.82032641982775933, 0, 0.0036008209322164601},
    {-0.57189558918789607, -0.82032641982775933, 0, 0.0036008209322164601},
    {0.82032641982775933, 0.57189558918789607, 0, 0.0036008209322164601},
    {-0.82032641982775933, 0.57189558918789607, 0, 0.0036008209322164601},
    {0.82032641982775933, -0.57189558918789607, 0, 0.0036008209322164601},
    {-0.82032641982775933, -0.57189558918789607, 0, 0.0036008209322164601},
    {0.57189558918789607, 0, 0.82032641982775933, 0.0036008209322164601},
    {-0.57189558918789607, 0, 0.82032641982775933, 0.0036008209322164601},
    {0.57189558918789607, 0, -0.82032641982775933, 0.0036008209322164601},
    {-0.57189558918789607, 0, -0.82032641982775933, 0.0036008209322164601},
    {0.82032641982775933, 0, 0.57189558918789607, 0.0036008209322164601},
    {-0.82032641982775933, 0, 0.57189558918789607, 0.0036008209322164601},
    {0.82032641982775933, 0, -0.57189558918789607, 0.0036008209322164601},
    {-0.82032641982775933, 0, -0.57189558918789607, 0.0036008209322164601},
    {0, 0.57189558918789607, 0.82032641982775933, 0.0036008209322164601},
    {0, -0.57189558918789607, 0.82032641982775933, 0.0036008209322164601},
    {0, 0.57189558918789607, -0.82032641982775933, 0.0036008209322164601},
    {0, -0.57189558918789607, -0.82032641982775933, 0.0036008209322164601},
    {0, 0.82032641982775933, 0.57189558918789607, 0.0036008209322164601},
    {0, -0.82032641982775933, 0.57189558918789607, 0.0036008209322164601},
    {0, 0.82032641982775933, -0.57189558918789607, 0.0036008209322164601},
    {0, -0.82032641982775933, -0.57189558918789607, 0.0036008209322164601},
    {0.25100347517704652, 0.80007274940739515, 0.54486773725807736, 0.003571540554273387},
    {-0.25100347517704652, 0.80007274940739515, 0.54486773725807736, 0.003571540554273387},
    {0.25100347517704652, -0.80007274940739515, 0.54486773725807736, 0.003571540554273387},
    {0.25100347517704652, 0.80007274940739515, -0.54486773725807736, 0.003571540554273387},
    {-0.25100347517704652, -0.80007274940739515, 0.54486773725807736, 0.003571540554273387},
    {0.25100347517704652, -0.80007274940739515, -0.54486773725807736, 0.003571540554273387},
    {-0.25100347517704652, 0.80007274940739515, -0.54486773725807736, 0.003571540554273387},
    {-0.25100347517704652, -0.80007274940739515, -0.54486773725807736, 0.003571540554273387},
    {0.80007274940739515, 0.25100347517704652, 0.54486773725807736, 0.003571540554273387},
    {-0.80007274940739515, 0.25100347517704652, 0.54486773725807736, 0.003571540554273387},
    {0.80007274940739515, -0.25100347517704652, 0.54486773725807736, 0.003571540554273387},
    {0.80007274940739515, 0.25100347517704652, -0.54486773725807736, 0.003571540554273387},
    {-0.80007274940739515, -0.25100347517704652, 0.54486773725807736, 0.003571540554273387},
    {0.80007274940739515, -0.25100347517704652, -0.54486773725807736, 0.003571540554273387},
    {-0.80007274940739515, 0.25100347517704652, -0.54486773725807736, 0.003571540554273387},
    {-0.80007274940739515, -0.25100347517704652, -0.54486773725807736, 0.003571540554273387},
    {0.54486773725807736, 0.25100347517704652, 0.80007274940739515, 0.003571540554273387},
    {-0.54486773725807736, 0.25100347517704652, 0.80007274940739515, 0.003571540554273387},
    {0.54486773725807736, -0.25100347517704652, 0.80007274940739515, 0.003571540554273387},
    {0.54486773725807736, 0.25100347517704652, -0.80007274940739515, 0.003571540554273387},
    {-0.54486773725807736, -0.25100347517704652, 0.80007274940739515, 0.003571540554273387},
    {0.54486773725807736, -0.25100347517704652, -0.80007274940739515, 0.003571540554273387},
    {-0.54486773725807736, 0.25100347517704652, -0.80007274940739515, 0.003571540554273387},
    {-0.54486773725807736, -0.25100347517704652, -0.80007274940739515, 0.003571540554273387},
    {0.54486773725807736, 0.80007274940739515, 0.25100347517704652, 0.003571540554273387},
    {-0.54486773725807736, 0.80007274940739515, 0.25100347517704652, 0.003571540554273387},
    {0.54486773725807736, -0.80007274940739515, 0.25100347517704652, 0.003571540554273387},
    {0.54486773725807736, 0.80007274940739515, -0.25100347517704652, 0.003571540554273387},
    {-0.54486773725807736, -0.80007274940739515, 0.25100347517704652, 0.003571540554273387},
    {0.54486773725807736, -0.80007274940739515, -0.25100347517704652, 0.003571540554273387},
    {-0.54486773725807736, 0.80007274940739515, -0.25100347517704652, 0.003571540554273387},
    {-0.54486773725807736, -0.80007274940739515, -0.25100347517704652, 0.003571540554273387},
    {0.25100347517704652, 0.54486773725807736, 0.80007274940739515, 0.003571540554273387},
    {-0.25100347517704652, 0.54486773725807736, 0.80007274940739515, 0.003571540554273387},
    {0.25100347517704652, -0.54486773725807736, 0.80007274940739515, 0.003571540554273387},
    {0.25100347517704652, 0.54486773725807736, -0.80007274940739515, 0.003571540554273387},
    {-0.25100347517704652, -0.54486773725807736, 0.80007274940739515, 0.003571540554273387},
    {0.25100347517704652, -0.54486773725807736, -0.80007274940739515, 0.003571540554273387},
    {-0.25100347517704652, 0.54486773725807736, -0.80007274940739515, 0.003571540554273387},
    {-0.25100347517704652, -0.54486773725807736, -0.80007274940739515, 0.003571540554273387},
    {0.80007274940739515, 0.54486773725807736, 0.25100347517704652, 0.003571540554273387},
    {-0.80007274940739515, 0.54486773725807736, 0.25100347517704652, 0.003571540554273387},
    {0.80007274940739515, -0.54486773725807736, 0.25100347517704652, 0.003571540554273387},
    {0.80007274940739515, 0.54486773725807736, -0.25100347517704652, 0.003571540554273387},
    {-0.80007274940739515, -0.54486773725807736, 0.25100347517704652, 0.003571540554273387},
    {0.80007274940739515, -0.54486773725807736, -0.25100347517704652, 0.003571540554273387},
    {-0.80007274940739515, 0.54486773725807736, -0.25100347517704652, 0.003571540554273387},
    {-0.80007274940739515, -0.54486773725807736, -0.25100347517704652, 0.003571540554273387},
    {0.1233548532583327, 0.41277240831685308, 0.90244252953300041, 0.0033923122050061698},
    {-0.1233548532583327, 0.41277240831685308, 0.90244252953300041, 0.0033923122050061698},
    {0.1233548532583327, -0.41277240831685308, 0.90244252953300041, 0.0033923122050061698},
    {0.1233548532583327, 0.41277240831685308, -0.90244252953300041, 0.0033923122050061698},
    {-0.1233548532583327, -0.41277240831685308, 0.90244252953300041, 0.0033923122050061698},
    {0.1233548532583327, -0.41277240831685308, -0.90244252953300041, 0.0033923122050061698},
    {-0.1233548532583327, 0.41277240831685308, -0.90244252953300041, 0.0033923122050061698},
    {-0.1233548532583327, -0.41277240831685308, -0.90244252953300041, 0.0033923122050061698},
    {0.41277240831685308, 0.1233548532583327, 0.90244252953300041, 0.0033923122050061698},
    {-0.41277240831685308, 0.1233548532583327, 0.90244252953300041, 0.0033923122050061698},
    {0.41277240831685308, -0.1233548532583327, 0.90244252953300041, 0.0033923122050061698},
    {0.41277240831685308, 0.1233548532583327, -0.90244252953300041, 0.0033923122050061698},
    {-0.41277240831685308, -0.1233548532583327, 0.90244252953300041, 0.0033923122050061698},
    {0.41277240831685308, -0.1233548532583327, -0.90244252953300041, 0.0033923122050061698},
    {-0.41277240831685308, 0.1233548532583327, -0.90244252953300041, 0.0033923122050061698},
    {-0.41277240831685308, -0.1233548532583327, -0.90244252953300041, 0.0033923122050061698},
    {0.90244252953300041, 0.1233548532583327, 0.41277240831685308, 0.0033923122050061698},
    {-0.90244252953300041, 0.1233548532583327, 0.41277240831685308, 0.0033923122050061698},
    {0.90244252953300041, -0.1233548532583327, 0.41277240831685308, 0.0033923122050061698},
    {0.90244252953300041, 0.1233548532583327, -0.41277240831685308, 0.0033923122050061698},
    {-0.90244252953300041, -0.1233548532583327, 0.41277240831685308, 0.0033923122050061698},
    {0.90244252953300041, -0.1233548532583327, -0.41277240831685308, 0.0033923122050061698},
    {-0.90244252953300041, 0.1233548532583327, -0.41277240831685308, 0.0033923122050061698},
    {-0.90244252953300041, -0.1233548532583327, -0.41277240831685308, 0.0033923122050061698},
    {0.90244252953300041, 0.41277240831685308, 0.1233548532583327, 0.0033923122050061698},
    {-0.90244252953300041, 0.41277240831685308, 0.1233548532583327, 0.0033923122050061698},
    {0.90244252953300041, -0.41277240831685308, 0.1233548532583327, 0.0033923122050061698},
    {0.90244252953300041, 0.41277240831685308, -0.1233548532583327, 0.0033923122050061698},
    {-0.90244252953300041, -0.41277240831685308, 0.1233548532583327, 0.0033923122050061698},
    {0.90244252953300041, -0.41277240831685308, -0.1233548532583327, 0.0033923122050061698},
    {-0.90244252953300041, 0.41277240831685308, -0.1233548532583327, 0.0033923122050061698},
    {-0.90244252953300041, -0.41277240831685308, -0.1233548532583327, 0.0033923122050061698},
    {0.1233548532583327, 0.90244252953300041, 0.41277240831685308, 0.0033923122050061698},
    {-0.1233548532583327, 0.90244252953300041, 0.41277240831685308, 0.0033923122050061698},
    {0.1233548532583327, -0.90244252953300041, 0.41277240831685308, 0.0033923122050061698},
    {0.1233548532583327, 0.90244252953300041, -0.41277240831685308, 0.0033923122050061698},
    {-0.1233548532583327, -0.90244252953300041, 0.41277240831685308, 0.0033923122050061698},
    {0.1233548532583327, -0.90244252953300041, -0.41277240831685308, 0.0033923122050061698},
    {-0.1233548532583327, 0.90244252953300041, -0.41277240831685308, 0.0033923122050061698},
    {-0.1233548532583327, -0.90244252953300041, -0.41277240831685308, 0.0033923122050061698},
    {0.41277240831685308, 0.90244252953300041, 0.1233548532583327, 0.0033923122050061698},
    {-0.41277240831685308, 0.90244252953300041, 0.1233548532583327, 0.0033923122050061698},
    {0.41277240831685308, -0.90244252953300041, 0.1233548532583327, 0.0033923122050061698},
    {0.41277240831685308, 0.90244252953300041, -0.1233548532583327, 0.0033923122050061698},
    {-0.41277240831685308, -0.90244252953300041, 0.1233548532583327, 0.0033923122050061698},
    {0.41277240831685308, -0.90244252953300041, -0.1233548532583327, 0.0033923122050061698},
    {-0.41277240831685308, 0.90244252953300041, -0.1233548532583327, 0.0033923122050061698},
    {-0.41277240831685308, -0.90244252953300041, -0.1233548532583327, 0.0033923122050061698},
};

}  // namespace

const std::vector<LebedevTable>& lebedev_tables() {
  static const std::vector<LebedevTable> tables = {
      {3, std::span<const LebedevNode>(kLebedev3)},
      {5, std::span<const LebedevNode>(kLebedev5)},
      {7, std::span<const LebedevNode>(kLebedev7)},
      {9, std::span<const LebedevNode>(kLebedev9)},
      {11, std::span<const LebedevNode>(kLebedev11)},
      {13, std::span<const LebedevNode>(kLebedev13)},
      {15, std::span<const LebedevNode>(kLebedev15)},
      {17, std::span<const LebedevNode>(kLebedev17)},
      {19, std::span<const LebedevNode>(kLebedev19)},
      {23, std::span<const LebedevNode>(kLebedev23)},
      {29, std::span<const LebedevNode>(kLebedev29)},
  };
  return tables;
}

}  // namespace symprobe::detail
