#pragma once

#include <string>

#include <json.hpp>

#include "clover/hset.hpp"
#include "clover/magnus.hpp"
#include "clover/milnor.hpp"
#include "clover/seq.hpp"
#include "clover/word.hpp"

namespace clover::io {

using json = nlohmann::ordered_json;

// Words serialize as lists of [index, sign] pairs, 1-based, sign in {1, -1};
// the empty list is the identity.
json word_to_json(const GroupWord& w);
GroupWord word_from_json(const json& j, int rank);

// A tangle file is a JSON document { "n": <int>, "longitudes": [word, ...] }.
json tangle_to_json(const TanglePresentation& t);
TanglePresentation tangle_from_json(const json& j, bool allow_nonzero_framing = false);
TanglePresentation load_tangle(const std::string& path, bool allow_nonzero_framing = false);

// A series serializes as a list of [[index...], "coefficient"] pairs in
// graded-lex order with zero coefficients omitted; the constant term is
// keyed by the empty list. Coefficients are decimal strings, since they
// are unbounded integers.
json series_to_json(const MagnusSeries& s);

json mu_table_to_json(const MuTable& table);

// basis, base vector, pair labels and generator matrix (row-major).
json lattice_to_json(const AffineLattice& lattice);

// Sequences on the command line are digit strings when n <= 9 ("1234") and
// comma-separated integers otherwise.
SequenceKey parse_sequence(const std::string& text, int n);
std::string format_sequence(const SequenceKey& I, int n);

std::string format_int(const Int& v);
std::string series_to_text(const MagnusSeries& s);

}  // namespace clover::io
