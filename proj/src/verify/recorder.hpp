#pragma once

#include "tenv/backends/context.hpp"
#include "tenv/errors.hpp"
#include "tenv/verify/suites.hpp"

#include <functional>
#include <string>

namespace tenv::verify {

constexpr std::size_t kMaxMessages = 12;

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    void check(bool ok, const std::function<std::string()>& describe) {
        ++report_.checks;
        if (ok) return;
        fail(describe());
    }

    /// Runs body; an exception counts as one failed check.
    template <class F>
    void guard(const std::string& where, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++report_.checks;
            fail(where + ": unexpected exception: " + e.what());
        }
    }

    /// Passes iff body throws an Error with the given code.
    template <class F>
    void expect_error(ErrorCode code, const std::string& where, F&& body) {
        bool ok = false;
        try {
            body();
        } catch (const Error& e) {
            ok = e.code() == code;
        } catch (const std::exception&) {
        }
        check(ok, [&] { return where + ": expected a " + Error(code, "").kind() + " error"; });
    }

private:
    void fail(std::string msg) {
        ++report_.failures;
        if (report_.messages.size() < kMaxMessages) report_.messages.push_back(std::move(msg));
    }

    SuiteReport& report_;
};

std::string label(const Context& ctx);

void rel_axioms(Recorder& rec, const SuiteOptions& opt);
void projectors(Recorder& rec, const SuiteOptions& opt);
void oracle(Recorder& rec, const SuiteOptions& opt);
void dimensions(Recorder& rec, const SuiteOptions& opt);
void structure_constants(Recorder& rec, const SuiteOptions& opt);
void maltsev(Recorder& rec, const SuiteOptions& opt);
void tensor_decomposition(Recorder& rec, const SuiteOptions& opt);
void associativity(Recorder& rec, const SuiteOptions& opt);

}  // namespace tenv::verify
