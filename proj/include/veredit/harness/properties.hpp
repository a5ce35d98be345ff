#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "veredit/harness/generators.hpp"

namespace veredit::harness {

struct PropertyFailure {
    std::uint64_t seed = 0; // regenerates the failing case on its own
    std::string description;
    bool operator==(const PropertyFailure&) const = default;
};

struct PropertyReport {
    std::string property_name;
    std::size_t cases_run = 0;
    std::vector<PropertyFailure> failures;
    bool passed() const { return failures.empty(); }
    bool operator==(const PropertyReport&) const = default;
};

// Executable forms of the verified statements about the buffer operations.
// Each one must hold for EVERY input satisfying its hypothesis; inputs
// outside the hypothesis return true vacuously. The suites below sample
// hypothesis-respecting inputs, but any single false return is a defect.

/// n <= |l|  ->  |first_n(l, n)| = n
bool check_lemma_1(const Buffer& l, LineIndex n);

/// n <= |l1|  ->  read_line(first_n(l1, n) ++ [s] ++ l2, n, d) = s
bool check_thm_1(LineIndex n, const Buffer& l1, const Buffer& l2, const Line& s,
                 const Line& d);

/// Inserting into the empty buffer yields the singleton, at any position.
bool check_can_insert(const Line& s, LineIndex n);

/// n <= |b|  ->  reading position n right after inserting s there yields s.
bool check_can_read(const Line& s, LineIndex n, const Buffer& b);

/// n <= |b|  ->  delete-then-insert at n makes position n read as s2.
bool check_can_change(const Line& s2, LineIndex n, const Buffer& b);

/// Runs the five checks above over generated hypothesis-respecting inputs,
/// `cases` cases each. Deterministic given spec.seed, independent of thread
/// count; failed cases carry a reproduction seed.
std::vector<PropertyReport> run_property_suite(const TraceSpec& spec, std::size_t cases);

/// Out-of-range behavior: insert past the end appends, delete past the end
/// is a no-op, read past the end yields the fallback. Positions drawn in
/// [|b|, |b| + spec.max_pos_slack], occasionally extreme.
std::vector<PropertyReport> run_clamping_suite(const TraceSpec& spec, std::size_t cases);

/// Shape properties of the operations themselves: partition, insert/delete
/// length, insert/delete inverse, and the insert frame property.
std::vector<PropertyReport> run_structural_suite(const TraceSpec& spec, std::size_t cases);

/// Readable forms for counterexample output: quoted line with control bytes
/// escaped, and a bracketed line list.
std::string render_line(const Line& line);
std::string render_buffer(const Buffer& b);

} // namespace veredit::harness
