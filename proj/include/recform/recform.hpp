#pragma once

#include "recform/binary.hpp"
#include "recform/complex_approx.hpp"
#include "recform/errors.hpp"
#include "recform/factorization.hpp"
#include "recform/form.hpp"
#include "recform/form_builder.hpp"
#include "recform/io.hpp"
#include "recform/matrix.hpp"
#include "recform/rat.hpp"
#include "recform/recurrence.hpp"
#include "recform/roots.hpp"
#include "recform/unipoly.hpp"
#include "recform/verify.hpp"
#include "recform/cli.hpp"
