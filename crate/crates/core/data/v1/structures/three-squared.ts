structure three-squared
constants (1,1) (0,0) (−1,−1)
elements (1,1) (1,0) (1,−1) (0,1) (0,0) (0,−1) (−1,1) (−1,0) (−1,−1)
table
    (1,1)   (1,0)  (1,−1)   (0,1)   (0,0)  (0,−1)  (−1,1)  (−1,0) (−1,−1)
    (1,0)   (1,0)   (1,0)   (0,0)   (0,0)   (0,0)  (−1,0)  (−1,0)  (−1,0)
   (1,−1)   (1,0)   (1,1)  (0,−1)   (0,0)   (0,1) (−1,−1)  (−1,0)  (−1,1)
    (0,1)   (0,0)  (0,−1)   (0,1)   (0,0)  (0,−1)   (0,1)   (0,0)  (0,−1)
    (0,0)   (0,0)   (0,0)   (0,0)   (0,0)   (0,0)   (0,0)   (0,0)   (0,0)
   (0,−1)   (0,0)   (0,1)  (0,−1)   (0,0)   (0,1)  (0,−1)   (0,0)   (0,1)
   (−1,1)  (−1,0) (−1,−1)   (0,1)   (0,0)  (0,−1)   (1,1)   (1,0)  (1,−1)
   (−1,0)  (−1,0)  (−1,0)   (0,0)   (0,0)   (0,0)   (1,0)   (1,0)   (1,0)
  (−1,−1)  (−1,0)  (−1,1)  (0,−1)   (0,0)   (0,1)  (1,−1)   (1,0)   (1,1)
end
