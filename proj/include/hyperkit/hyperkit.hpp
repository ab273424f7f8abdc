#pragma once

#include "ablation.hpp"
#include "axioms.hpp"
#include "canonical.hpp"
#include "check_report.hpp"
#include "core.hpp"
#include "document.hpp"
#include "elem_set.hpp"
#include "enumeration.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "extraction.hpp"
#include "hasse.hpp"
#include "nakano.hpp"
#include "report_json.hpp"
