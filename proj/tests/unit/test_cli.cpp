#include "tenv/cli/app.hpp"
#include "tenv/io/json.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "tenv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = tenv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

tenv::Json doc(const Outcome& o) { return tenv::Json::parse(o.out); }

}  // namespace

TEST_CASE("documented commands") {
    const Outcome h = run({"homdim", "--backend", "opset", "--x", "2", "--y", "2"});
    CHECK(h.code == 0);
    CHECK(doc(h)["dim"] == 7);
    CHECK(doc(h)["schema"] == "tensor-envelope/1");

    const Outcome c = run({"compose", "--backend", "opset", "--degree", "t-power", "--basis", "curly", "--x", "1", "--y", "1",
                           "--z", "1", "--f", "[[0],[1]]", "--g", "[[0],[1]]"});
    CHECK(c.code == 0);
    CHECK(doc(c)["text"] == "(t)*{[[0],[1]]}");

    const Outcome t = run({"table", "--x", "1", "--basis", "round", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("e1 * e1 = (-1 + t)*e0 + (-2 + t)*e1") != std::string::npos);

    const Outcome f = run({"table", "--backend", "finset", "--x", "1"});
    CHECK(f.code == 0);
    CHECK(doc(f)["entries"].dump() == R"([[[{"element":0,"poly":[1],"text":"1"}]]])");

    const Outcome v = run({"verify", "--suite", "dimensions", "--max-size", "2"});
    CHECK(v.code == 0);
    CHECK(doc(v)["passed"] == true);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"tensor", "--x", "1", "--y", "1", "--x2", "1", "--y2", "1", "--f", "[[0],[1]]", "--g",
                                        "[[0],[1]]", "--basis", "round"};
    const Outcome a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("eval-at keeps the support") {
    const Outcome plain = run({"compose", "--basis", "round", "--x", "1", "--y", "1", "--z", "1", "--f", "[[0],[1]]", "--g",
                               "[[0],[1]]"});
    const Outcome at2 = run({"compose", "--basis", "round", "--x", "1", "--y", "1", "--z", "1", "--f", "[[0],[1]]", "--g",
                             "[[0],[1]]", "--eval-at", "2"});
    REQUIRE(plain.code == 0);
    REQUIRE(at2.code == 0);
    const auto p = doc(plain)["result"]["terms"], q = doc(at2)["result"]["terms"];
    REQUIRE(p.size() == q.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i]["rel"] == q[i]["rel"]);
    CHECK(q[1]["value"] == "0");
    CHECK(q[0]["value"] == "1");
}

TEST_CASE("error codes") {
    CHECK(run({"homdim", "--x", "1"}).code == 2);
    CHECK(run({"homdim", "--x", "1", "--y", "1", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"compose", "--x", "1", "--y", "1", "--z", "1", "--f", "[[0],[1]", "--g", "[[0],[1]]"}).code == 2);
    CHECK(run({"compose", "--backend", "opset", "--x", "2", "--y", "1", "--z", "1", "--f", "[[0,1],[2]]", "--g", "[[0,1]]"})
              .code == 3);
    const Outcome cap = run({"homdim", "--backend", "finset", "--degree", "t-power", "--x", "1", "--y", "1"});
    CHECK(cap.code == 4);
    CHECK(doc(cap)["error"]["kind"] == "capability");
    CHECK(run({"homdim", "--backend", "finset", "--basis", "gluing", "--x", "1", "--y", "1"}).code == 4);
    CHECK(run({"homdim", "--x", "6", "--y", "6"}).code == 5);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("other commands") {
    const Outcome w = run({"omega", "--x", "3", "--y", "2", "--f", "[0,2]"});
    CHECK(w.code == 0);
    CHECK(doc(w)["text"] == "-2 + t");
    const Outcome m = run({"mobius", "--x", "3", "--f", "[[0,1,2]]", "--g", "[[0],[1],[2]]"});
    CHECK(m.code == 0);
    CHECK(doc(m)["mobius"] == 2);
    const Outcome d = run({"decompose", "--factors", "1,1,1"});
    CHECK(d.code == 0);
    CHECK(doc(d)["count"] == 5);
    const Outcome cv = run({"convert", "--x", "1", "--y", "1", "--basis", "curly", "--f", "[[0],[1]]", "--format", "text"});
    CHECK(cv.code == 0);
    CHECK(cv.out == "([[0,1]]) + ([[0],[1]])\n");
    const Outcome g = run({"compose", "--basis", "gluing", "--x", "1", "--y", "1", "--z", "1", "--f", "{x0:[],y0:[],bij:[]}",
                           "--g", "{x0:[],y0:[],bij:[]}"});
    CHECK(g.code == 0);
    CHECK(doc(g)["text"] == "(t)*{[[0],[1]]}");
}
