#pragma once

// Umbrella header: the full library.

#include "classprod/class_algebra.hpp"
#include "classprod/cli.hpp"
#include "classprod/constructions.hpp"
#include "classprod/errors.hpp"
#include "classprod/group.hpp"
#include "classprod/group_spec.hpp"
#include "classprod/report_io.hpp"
#include "classprod/structure.hpp"
#include "classprod/theorem_suite.hpp"
