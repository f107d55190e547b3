#pragma once
#include <cstdint>
#include <vector>

namespace pdim::kernels {

// Agreement scans are the hot loop of verification: for a pair of code rows,
// find the first coordinate where they agree. Scalar reference plus SIMD
// variants, selected at runtime; equivalence is enforced by tests.
enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
bool set_backend(Backend b);  // false (and no change) if unsupported on this host
void reset_backend();         // re-detect; honors PDIM_KERNEL=scalar|avx2|neon
const char* backend_name(Backend b);

// Row-major int32 matrix, stride padded to a multiple of 8 lanes. Row r is
// padded with the sentinel -(r+1): real symbols are >= 0 and sentinels differ
// per row, so padded lanes never fake an agreement between distinct rows.
class CodeMatrix {
 public:
  CodeMatrix(int rows, int cols);
  void fill_row(int r, const std::int32_t* src);  // cols values
  std::int32_t* row(int r) { return data_.data() + static_cast<size_t>(r) * stride_; }
  const std::int32_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * stride_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int stride() const { return stride_; }

 private:
  int rows_, cols_, stride_;
  std::vector<std::int32_t> data_;
};

// Smallest column where rows r1 and r2 carry the same symbol, or -1.
int first_agreement(const CodeMatrix& m, int r1, int r2);

}  // namespace pdim::kernels
