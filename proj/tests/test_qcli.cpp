#include "doctest.h"
#include "qqs/jsonio.hpp"

using namespace qqs;
using nlohmann::json;

TEST_CASE("scalar round trip") {
    RatScalar odd = odd_square_coeff();
    for (const RatScalar& c : {RatScalar(0), RatScalar(-3), RatScalar::vpow(-2), odd, odd * RatScalar(qbinom(4, 2))})
        CHECK(scalar_from_json(to_json(c)) == c);
    CHECK(scalar_from_json(json(5)) == RatScalar(5));
    CHECK_THROWS_AS(scalar_from_json(json::array()), ParseError);
}

TEST_CASE("matrix round trip and layout") {
    SuperMatrix a(2);
    a.e(1, 2) = 3;
    a.o(2, 1) = 1;
    json j = to_json(a);
    CHECK(j["even"] == json::parse("[[0,3],[0,0]]"));
    CHECK(j["odd"] == json::parse("[[0,0],[1,0]]"));
    CHECK(matrix_from_json(j) == a);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"even": [[0,1]], "odd": [[0]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"even": [[0]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"even": [[0]], "odd": [[0.5]]})")), ParseError);
}

TEST_CASE("element round trips") {
    QPolyElement p = QPolyElement::basis(SuperIndex({1, 0}, {0, 1}), RatScalar::vpow(3)) +
                     QPolyElement::basis(SuperIndex({0, 2}, {0, 0}), odd_square_coeff());
    CHECK(qpoly_from_json(to_json(p)) == p);

    SuperMatrix a(2), b(2);
    a.e(2, 1) = 1;
    b.o(1, 1) = 1;
    b.e(2, 2) = 2;
    TensorElement t = TensorElement::basis(a, RatScalar(-1)) + TensorElement::basis(b, RatScalar::vpow(1) + RatScalar(2));
    CHECK(tensor_from_json(to_json(t)) == t);

    SuperMatrix c(2);
    c.o(1, 1) = 1;
    c.e(1, 2) = 2;
    VElement v = symbol(a, {1, -1}) + symbol(c, {0, 2}, RatScalar::vpow(-4));
    CHECK(velement_from_json(to_json(v)) == v);
    CHECK(to_json(VElement()) == json::array());
}

TEST_CASE("malformed elements") {
    CHECK_THROWS_AS(tensor_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(velement_from_json(json::parse(R"([{"matrix": {"even": [[0]], "odd": [[0]]}, "j": [0, 0], "coeff": "1"}])")),
                    ParseError);
    // A nonzero even diagonal is not a V_v(n) symbol.
    CHECK_THROWS_AS(velement_from_json(json::parse(R"([{"matrix": {"even": [[1]], "odd": [[0]]}, "j": [0], "coeff": "1"}])")),
                    ParseError);
    CHECK_THROWS_AS(qpoly_from_json(json::parse(R"([{"even": [1], "odd": [0, 0], "coeff": "1"}])")), ParseError);
}

TEST_CASE("a negative entry gives the zero symbol") {
    json j = json::parse(R"([{"matrix": {"even": [[0, -1], [0, 0]], "odd": [[0, 0], [0, 0]]}, "j": [0, 0], "coeff": "1"}])");
    CHECK(velement_from_json(j).is_zero());
}
