// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include "tenv/verify/suites.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome suite(const std::string& name, double limit_seconds = 0) {
    tenv::SuiteOptions opt;
    opt.max_size = 3;
    const auto report = tenv::run_suite(name, opt);
    std::ostringstream detail;
    detail << name << ": " << report.checks << " checks, " << report.failures << " failures, " << report.seconds
           << " s";
    bool ok = report.passed();
    if (limit_seconds > 0 && report.seconds >= limit_seconds) {
        ok = false;
        detail << " (limit " << limit_seconds << " s)";
    }
    for (std::size_t i = 0; i < report.messages.size() && i < 5; ++i) detail << "\n    " << report.messages[i];
    return {ok, detail.str()};
}

struct Run {
    std::string out;
    int status = -1;
};

Run shell(const std::string& command) {
    Run r;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> documented_examples() {
    std::ifstream in(TENV_README);
    std::vector<std::string> out;
    std::string line;
    const std::string prefix = "$ tenv ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) out.push_back(line.substr(prefix.size()));
    }
    return out;
}

Outcome determinism() {
    const std::string tool = std::string("'") + TENV_TOOL + "'";
    const auto examples = documented_examples();
    std::ostringstream detail;
    bool ok = examples.size() >= 10;
    detail << examples.size() << " documented examples";
    for (const auto& args : examples) {
        const Run a = shell(tool + " " + args);
        const Run b = shell(tool + " " + args);
        if (a.out != b.out || a.status != b.status) {
            ok = false;
            detail << "\n    differs: " << args;
        }
        if (a.status < 0 || a.out.empty()) {
            ok = false;
            detail << "\n    did not run: " << args;
        }
    }
    const Run all = shell(tool + " verify --all --format text");
    detail << "; verify --all exit " << all.status;
    if (all.status != 0) {
        ok = false;
        detail << "\n" << all.out;
    }
    return {ok, detail.str()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "axiom suite", [] { return suite("rel-axioms", 60); }},
        {2, "projector suite", [] { return suite("projectors"); }},
        {3, "oracle equivalence", [] { return suite("oracle", 300); }},
        {4, "dimension counts", [] { return suite("dimensions"); }},
        {5, "worked structure constants", [] { return suite("structure-constants"); }},
        {6, "Mal'tsev suite", [] { return suite("maltsev"); }},
        {7, "tensor decomposition", [] { return suite("tensor-decomposition"); }},
        {8, "associativity", [] { return suite("associativity"); }},
        {9, "CLI determinism", determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.detail
                  << std::endl;
    }
    std::cout << (failed ? "FAILED" : "ALL PASS") << " " << (9 - failed) << "/9" << std::endl;
    return failed ? 1 : 0;
}
