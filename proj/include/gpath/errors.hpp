#pragma once

#include <stdexcept>
#include <string>

namespace gpath {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define GPATH_DEFINE_ERROR(Name)       \
  struct Name : Error {                \
    using Error::Error;                \
  }

// graph-core
GPATH_DEFINE_ERROR(TooFewVertices);
GPATH_DEFINE_ERROR(OutOfRangeEdges);
GPATH_DEFINE_ERROR(UnrandomizedMatrix);

// dp-mech
GPATH_DEFINE_ERROR(EmptyCandidates);
GPATH_DEFINE_ERROR(NonPositiveSensitivity);
GPATH_DEFINE_ERROR(DomainViolation);
GPATH_DEFINE_ERROR(BadRelationValue);
GPATH_DEFINE_ERROR(TooFewEdges);
GPATH_DEFINE_ERROR(BadBudget);

// preprocess
GPATH_DEFINE_ERROR(InvalidInput);
GPATH_DEFINE_ERROR(CyclicPath);
GPATH_DEFINE_ERROR(InstanceTooLarge);

// publish
GPATH_DEFINE_ERROR(InternalNontermination);

// recover
GPATH_DEFINE_ERROR(UnknownEdge);
GPATH_DEFINE_ERROR(InconsistentView);

// io / harness
GPATH_DEFINE_ERROR(ParseError);
GPATH_DEFINE_ERROR(ConfigError);
GPATH_DEFINE_ERROR(IoError);

#undef GPATH_DEFINE_ERROR

}  // namespace gpath
