#pragma once

#include "envlab/arrangement.hpp"
#include "envlab/commands.hpp"
#include "envlab/detloci.hpp"
#include "envlab/envelope.hpp"
#include "envlab/field.hpp"
#include "envlab/form.hpp"
#include "envlab/form_matrix.hpp"
#include "envlab/graded.hpp"
#include "envlab/hilbertburch.hpp"
#include "envlab/linalg.hpp"
#include "envlab/monomial.hpp"
#include "envlab/report.hpp"
#include "envlab/resolution_data.hpp"
#include "envlab/sparse.hpp"
