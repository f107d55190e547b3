#include "pdim/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

#include "pdim/errors.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define PDIM_X86 1
#include <immintrin.h>
#elif defined(__aarch64__)
#define PDIM_NEON 1
#include <arm_neon.h>
#endif

namespace pdim::kernels {

CodeMatrix::CodeMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("bad matrix shape");
  stride_ = ((cols + 7) / 8) * 8;
  if (stride_ == 0) stride_ = 8;
  data_.assign(static_cast<size_t>(rows) * stride_, 0);
  for (int r = 0; r < rows; ++r) {
    std::int32_t* p = row(r);
    for (int c = cols; c < stride_; ++c) p[c] = -(r + 1);
  }
}

void CodeMatrix::fill_row(int r, const std::int32_t* src) {
  std::memcpy(row(r), src, sizeof(std::int32_t) * static_cast<size_t>(cols_));
}

static int first_agree_scalar(const std::int32_t* a, const std::int32_t* b, int stride) {
  for (int c = 0; c < stride; ++c)
    if (a[c] == b[c]) return c;
  return -1;
}

#ifdef PDIM_X86
__attribute__((target("avx2"))) static int first_agree_avx2(const std::int32_t* a,
                                                            const std::int32_t* b, int stride) {
  for (int c = 0; c < stride; c += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + c));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + c));
    __m256i eq = _mm256_cmpeq_epi32(va, vb);
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(eq));
    if (mask) return c + __builtin_ctz(static_cast<unsigned>(mask));
  }
  return -1;
}
#endif

#ifdef PDIM_NEON
static int first_agree_neon(const std::int32_t* a, const std::int32_t* b, int stride) {
  for (int c = 0; c < stride; c += 4) {
    uint32x4_t eq = vceqq_s32(vld1q_s32(a + c), vld1q_s32(b + c));
    if (vmaxvq_u32(eq) != 0) {
      for (int k = 0; k < 4; ++k)
        if (a[c + k] == b[c + k]) return c + k;
    }
  }
  return -1;
}
#endif

using AgreeFn = int (*)(const std::int32_t*, const std::int32_t*, int);

static bool backend_supported(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#ifdef PDIM_X86
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#ifdef PDIM_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

static AgreeFn fn_for(Backend b) {
  switch (b) {
#ifdef PDIM_X86
    case Backend::Avx2:
      return first_agree_avx2;
#endif
#ifdef PDIM_NEON
    case Backend::Neon:
      return first_agree_neon;
#endif
    default:
      return first_agree_scalar;
  }
}

static Backend g_backend = Backend::Scalar;
static AgreeFn g_fn = nullptr;

static void detect() {
  Backend b = Backend::Scalar;
  if (backend_supported(Backend::Avx2)) b = Backend::Avx2;
  if (backend_supported(Backend::Neon)) b = Backend::Neon;
  if (const char* env = std::getenv("PDIM_KERNEL")) {
    std::string s(env);
    if (s == "scalar") b = Backend::Scalar;
    else if (s == "avx2" && backend_supported(Backend::Avx2)) b = Backend::Avx2;
    else if (s == "neon" && backend_supported(Backend::Neon)) b = Backend::Neon;
  }
  g_backend = b;
  g_fn = fn_for(b);
}

Backend active_backend() {
  if (!g_fn) detect();
  return g_backend;
}

bool set_backend(Backend b) {
  if (!backend_supported(b)) return false;
  g_backend = b;
  g_fn = fn_for(b);
  return true;
}

void reset_backend() { detect(); }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

int first_agreement(const CodeMatrix& m, int r1, int r2) {
  if (!g_fn) detect();
  if (r1 == r2) return m.cols() > 0 ? 0 : -1;  // padded lanes of one row agree with themselves
  return g_fn(m.row(r1), m.row(r2), m.stride());
}

}  // namespace pdim::kernels
