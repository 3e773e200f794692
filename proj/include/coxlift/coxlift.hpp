#pragma once

#include "coxlift/alcove.hpp"
#include "coxlift/any_group.hpp"
#include "coxlift/bruhat.hpp"
#include "coxlift/closed_forms.hpp"
#include "coxlift/enumerate.hpp"
#include "coxlift/glp.hpp"
#include "coxlift/roots.hpp"
#include "coxlift/rpoly.hpp"
#include "coxlift/sampling.hpp"
#include "coxlift/sweep.hpp"
#include "coxlift/text.hpp"
