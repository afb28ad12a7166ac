#pragma once

// Readable Catch2 failure messages for the library's value types.

#include "gammacheb/laurent.hpp"
#include "gammacheb/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

template <>
struct Catch::StringMaker<gammacheb::Poly> {
    static std::string convert(const gammacheb::Poly& p) { return gammacheb::to_string(p); }
};

template <>
struct Catch::StringMaker<gammacheb::LaurentPoly> {
    static std::string convert(const gammacheb::LaurentPoly& p) { return gammacheb::to_string(p); }
};

template <>
struct Catch::StringMaker<gammacheb::Rational> {
    static std::string convert(const gammacheb::Rational& r) { return gammacheb::to_string(r); }
};
