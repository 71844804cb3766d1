#include "recorder.hpp"

#include "tenv/backends/context.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace tenv {

namespace {

using SuiteFn = void (*)(verify::Recorder&, const SuiteOptions&);

struct Entry {
    const char* name;
    SuiteFn fn;
};

constexpr Entry kSuites[] = {
    {"rel-axioms", verify::rel_axioms},
    {"projectors", verify::projectors},
    {"oracle", verify::oracle},
    {"dimensions", verify::dimensions},
    {"structure-constants", verify::structure_constants},
    {"maltsev", verify::maltsev},
    {"tensor-decomposition", verify::tensor_decomposition},
    {"associativity", verify::associativity},
};

}  // namespace

namespace verify {

std::string label(const Context& ctx) {
    return std::string(backend_name(ctx.backend())) + "/" + std::string(degree_name(ctx.degree()));
}

}  // namespace verify

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kSuites) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

std::vector<Degree> applicable_degrees(Backend b) {
    // zero-noniso breaks pullback stability on finset, so it is not a degree function there.
    if (b == Backend::finset) return {Degree::one};
    return {Degree::one, Degree::zero_noniso, Degree::t_power};
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opt) {
    for (const auto& e : kSuites) {
        if (name != e.name) continue;
        SuiteReport report;
        report.name = e.name;
        verify::Recorder rec(report);
        const auto start = std::chrono::steady_clock::now();
        rec.guard(report.name, [&] { e.fn(rec, opt); });
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw ParseError("unknown suite: " + std::string(name));
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt) {
    for (const auto& n : names) {
        bool known = false;
        for (const auto& e : kSuites) known = known || n == e.name;
        if (!known) throw ParseError("unknown suite: " + n);
    }
    std::vector<SuiteReport> out(names.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(names.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < names.size(); ++i) out[i] = run_suite(names[i], opt);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < names.size(); i = next++) out[i] = run_suite(names[i], opt);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace tenv
